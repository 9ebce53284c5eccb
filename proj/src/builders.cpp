#include "phin/builders.hpp"

#include "phin/exact_linalg.hpp"
#include "phin/laurent.hpp"

#include <stdexcept>

namespace phin {

namespace {

struct SourceGenus {
  std::int64_t operator()(const GenusZero&) const { return 0; }
  std::int64_t operator()(const EllipticCurveSpec&) const { return 1; }
  std::int64_t operator()(const ExplicitFrobenius& m) const {
    return static_cast<std::int64_t>(m.matrix.rows() / 2);
  }
};

WeilMatrix component_sum(const CurveInstance& c) {
  const PrimePower q{c.p, c.f};
  std::vector<WeilMatrix> blocks;
  for (std::size_t v : c.graph.vertices_by_id()) {
    blocks.push_back(component_frobenius(c.components.at(c.graph.vertices()[v].id), q));
  }
  return direct_sum(blocks, q);
}

// Residue along every annulus of each toric basis class, read off a
// hypercocycle representative. On annulus e the class restricts from both
// neighbouring components as a log form with residue C(e, j) plus a
// component-dependent exact part; the gluing function f_e is the primitive
// of the difference.
QMatrix residue_matrix(const DualGraph& g, const QMatrix& cycles) {
  QMatrix residues(cycles.rows(), cycles.cols());
  for (std::size_t j = 0; j < cycles.cols(); ++j) {
    const auto exponent = static_cast<std::int64_t>(j);
    for (std::size_t e = 0; e < cycles.rows(); ++e) {
      const Rational c = cycles(e, j);
      const LaurentForm omega_a{{-1, c}, {exponent, Rational(static_cast<std::int64_t>(g.tail_index(e)) + 1)}};
      const LaurentForm omega_b{{-1, c}, {exponent, Rational(static_cast<std::int64_t>(g.head_index(e)) + 1)}};
      const LogFunction glue = integrate(omega_a - omega_b);
      if (!glue.log_coeff.is_zero() || !check_hypercocycle(omega_a, omega_b, glue.poly)) {
        throw std::logic_error("residue_matrix: representative is not a hypercocycle");
      }
      if (!splitting_correction(glue.poly, integrate(omega_a), integrate(omega_b)).constant_type) {
        throw std::logic_error("residue_matrix: splitting correction is not constant");
      }
      residues(e, j) = residue(omega_a);
    }
  }
  return residues;
}

}  // namespace

std::int64_t source_genus(const ComponentSource& s) { return std::visit(SourceGenus{}, s); }

void validate_instance(const CurveInstance& c) {
  if (!is_prime(c.p)) throw CurveError("p is not prime");
  if (c.f < 1) throw CurveError("f must be >= 1");
  for (const auto& v : c.graph.vertices()) {
    const auto it = c.components.find(v.id);
    if (it == c.components.end()) throw CurveError("vertex '" + v.id + "' has no component source");
    if (source_genus(it->second) != v.genus) {
      throw CurveError("component source genus does not match vertex '" + v.id + "'");
    }
    if (const auto* e = std::get_if<EllipticCurveSpec>(&it->second); e && e->p != c.p) {
      throw CurveError("elliptic component at '" + v.id + "' is over a different prime");
    }
  }
  for (const auto& [id, src] : c.components) {
    (void)src;
    c.graph.vertex_index(id);  // throws GraphError on an unknown id
  }
}

WeilMatrix component_frobenius(const ComponentSource& s, PrimePower q) {
  if (std::holds_alternative<GenusZero>(s)) return WeilMatrix::empty(q);
  if (const auto* e = std::get_if<EllipticCurveSpec>(&s)) {
    if (e->p != q.p) throw CurveError("elliptic component over a different prime");
    return frobenius_of_elliptic(*e, q.f);
  }
  return require_weil(std::get<ExplicitFrobenius>(s).matrix, q);
}

PhiNModule build_from_curve(const CurveInstance& c) {
  validate_instance(c);
  const DualGraph& g = c.graph;
  if (!g.is_connected()) throw GraphError("graph is disconnected");
  const WeilMatrix components = component_sum(c);
  const Rational q(PrimePower{c.p, c.f}.value());

  const std::size_t edges = g.edges().size();
  const QMatrix cycles = cycle_basis(g).as_columns(edges);
  const std::size_t b1 = cycles.cols();

  // Boundary H^0(X^1)^- -> H(X) in coordinates dual to the cycle basis:
  // an edge function pairs with each cycle. It must kill the image of
  // H^0(X^0), i.e. the coboundaries.
  const QMatrix to_graph_h1 = cycles.transpose();
  if (!(to_graph_h1 * g.boundary_matrix().transpose()).is_zero()) {
    throw std::logic_error("build_from_curve: boundary map does not kill coboundaries");
  }

  const QMatrix monodromy = to_graph_h1 * residue_matrix(g, cycles);

  // Frobenius on the toric piece: q on the edge space restricted to cycles.
  const auto toric_phi = solve(cycles, q * cycles);
  // Frobenius on H(X): the identity on edge functions, pushed to the quotient.
  const auto lift = solve(to_graph_h1, QMatrix::identity(b1));
  if (!toric_phi || !lift) throw std::logic_error("build_from_curve: singular cycle data");
  const QMatrix weight0_phi = to_graph_h1 * *lift;

  PhiNModule m = assemble(c.p, c.f, monodromy, components);
  const std::size_t toric_offset = m.dims.w0 + m.dims.w1;
  if (m.phi.block(0, 0, b1, b1) != weight0_phi ||
      m.phi.block(toric_offset, toric_offset, b1, b1) != *toric_phi) {
    throw std::logic_error("build_from_curve: graph Frobenius disagrees with the block form");
  }
  return m;
}

PhiNModule build_from_av(const UniformizationData& u) {
  if (u.torus_rank < 0 || static_cast<std::size_t>(u.torus_rank) != u.gram.rows() ||
      !u.gram.is_square()) {
    throw ModuleError("gram must be torus_rank x torus_rank");
  }
  return assemble(u.p, u.f, u.gram, u.b_frobenius);
}

UniformizationData jacobian_data(const CurveInstance& c) {
  validate_instance(c);
  UniformizationData u;
  u.torus_rank = betti_one(c.graph);
  u.gram = monodromy_gram(c.graph);
  u.b_frobenius = component_sum(c);
  u.p = c.p;
  u.f = c.f;
  return u;
}

bool check_curve_jacobian_agreement(const CurveInstance& c) {
  return modules_equal(build_from_curve(c), build_from_av(jacobian_data(c)));
}

}  // namespace phin

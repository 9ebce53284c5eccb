#include "phin/phin_module.hpp"

#include <algorithm>

namespace phin {

namespace {

Check make_check(std::string name, bool ok) { return {std::move(name), ok}; }

}  // namespace

PhiNModule assemble(std::int64_t p, std::int64_t f, const QMatrix& gram, const WeilMatrix& w) {
  if (!is_prime(p) || f < 1) throw ModuleError("p must be prime and f >= 1");
  if (!(w.q() == PrimePower{p, f})) throw ModuleError("WeilMatrix q does not match p^f");
  if (!gram.is_integral()) throw ModuleError("gram is not an integer matrix");
  if (!gram.is_symmetric()) throw ModuleError("gram is not symmetric");
  if (!is_positive_definite(gram)) throw ModuleError("gram not positive definite");

  PhiNModule m;
  m.p = p;
  m.f = f;
  m.dims = {gram.rows(), w.matrix().rows(), gram.rows()};
  const Rational q(m.q());
  const std::vector<QMatrix> blocks{QMatrix::identity(m.dims.w0), w.matrix(),
                                    QMatrix::scalar(m.dims.w2, q)};
  m.phi = QMatrix::block_diagonal(blocks);
  m.n = QMatrix(m.dims.total(), m.dims.total());
  m.n.set_block(0, m.dims.w0 + m.dims.w1, gram);
  m.fil1_dim = static_cast<std::int64_t>(m.dims.w2) + w.fil_dim();
  m.gram = gram;
  return m;
}

bool RelationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool RelationReport::passed(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.passed;
  return false;
}

RelationReport verify_relations(const PhiNModule& m) {
  RelationReport r;
  const std::size_t dim = m.dims.total();
  const bool shapes = m.phi.rows() == dim && m.phi.cols() == dim && m.n.rows() == dim &&
                      m.n.cols() == dim;
  r.checks.push_back(make_check("shapes", shapes));
  if (!shapes) return r;
  const Rational q(m.q());
  r.checks.push_back(make_check("n_squared_zero", (m.n * m.n).is_zero()));
  r.checks.push_back(make_check("n_phi_relation", m.n * m.phi == q * (m.phi * m.n)));
  r.checks.push_back(make_check("phi_invertible", !determinant(m.phi).is_zero()));
  r.checks.push_back(make_check("rank_n", rank(m.n) == m.dims.w2));
  return r;
}

HodgeNewtonReport hodge_newton(const PhiNModule& m) {
  const Rational det = determinant(m.phi);
  if (det.is_zero()) throw ModuleError("hodge_newton: Phi is singular");
  HodgeNewtonReport r;
  r.t_newton = Rational(*padic_valuation(det, m.p)) / Rational(m.f);
  r.t_hodge = m.fil1_dim;
  r.newton = newton_polygon(char_poly(m.phi), m.p).scaled(m.f);
  const auto dim = static_cast<std::int64_t>(m.dims.total());
  r.hodge = make_polygon({{Rational(0), dim - m.fil1_dim}, {Rational(1), m.fil1_dim}});
  r.endpoints_equal = r.t_newton == Rational(r.t_hodge) && r.newton.height() == r.t_newton;
  r.newton_above_hodge = r.endpoints_equal;
  for (std::int64_t x = 0; x <= dim && r.newton_above_hodge; ++x) {
    r.newton_above_hodge = r.newton.value_at(x) >= r.hodge.value_at(x);
  }
  r.newton_symmetric = r.newton.symmetric_about(Rational(1));
  return r;
}

QMatrix monodromy_pairing_matrix(const PhiNModule& m) {
  const std::size_t dim = m.dims.total();
  QMatrix out(dim, dim);
  const std::size_t off = m.dims.w0 + m.dims.w1;
  out.set_block(off, off, m.gram);
  return out;
}

QMatrix duality_pairing(const PhiNModule& m) {
  const auto [w0, w1, w2] = m.dims;
  QMatrix pairing(w0 + w1 + w2, w0 + w1 + w2);
  pairing.set_block(0, w0 + w1, QMatrix::identity(w0));
  pairing.set_block(w0, w0, QMatrix::identity(w1));
  pairing.set_block(w0 + w1, 0, QMatrix::identity(w2));
  return pairing;
}

bool verify_monodromy_duality(const PhiNModule& m) {
  if (m.dims.w0 != m.dims.w2) return false;
  const QMatrix& dual_n = m.n;
  return duality_pairing(m) * dual_n == monodromy_pairing_matrix(m);
}

bool modules_equal(const PhiNModule& a, const PhiNModule& b) { return a == b; }

}  // namespace phin

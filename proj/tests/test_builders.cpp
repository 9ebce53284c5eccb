#include "graph_fixtures.hpp"

#include "phin/builders.hpp"
#include "phin/exact_linalg.hpp"
#include "phin/fuzz.hpp"

#include <doctest.h>

using namespace phin;
using namespace phin::fixtures;

namespace {

CurveInstance tate_curve() { return {single_loop(), {{"A", GenusZero{}}}, 5, 1}; }

CurveInstance theta_curve() { return {theta(), {{"A", GenusZero{}}, {"B", GenusZero{}}}, 5, 1}; }

CurveInstance banana_curve() {
  return {banana(1), {{"A", EllipticCurveSpec{5, 0, 1}}, {"B", GenusZero{}}}, 5, 1};
}

// Consistent relabeling: new ids, reversed storage order.
CurveInstance relabeled(const CurveInstance& c) {
  std::vector<Vertex> vs;
  std::map<std::string, ComponentSource> comps;
  const auto& old_vs = c.graph.vertices();
  for (std::size_t i = old_vs.size(); i-- > 0;) {
    vs.push_back({"w" + std::to_string(old_vs.size() - i) + old_vs[i].id, old_vs[i].genus});
    comps.emplace(vs.back().id, c.components.at(old_vs[i].id));
  }
  auto rename = [&](const std::string& id) {
    for (std::size_t i = 0; i < old_vs.size(); ++i)
      if (old_vs[i].id == id) return "w" + std::to_string(old_vs.size() - i) + id;
    throw std::logic_error("unknown id");
  };
  std::vector<Edge> es;
  const auto& old_es = c.graph.edges();
  for (std::size_t i = old_es.size(); i-- > 0;) {
    es.push_back({"z" + std::to_string(1000 - i), rename(old_es[i].tail), rename(old_es[i].head)});
  }
  return {DualGraph(vs, es), comps, c.p, c.f};
}

}  // namespace

TEST_CASE("build_from_curve examples") {
  const PhiNModule t = build_from_curve(tate_curve());
  CHECK(t == assemble(5, 1, QMatrix{{1}}, WeilMatrix::empty({5, 1})));

  const QMatrix genus2 = direct_sum({frobenius_of_elliptic({5, 1, 0}), frobenius_of_elliptic({5, 0, 1})},
                                    {5, 1}).matrix();
  const CurveInstance good{single_vertex_genus(2), {{"A", ExplicitFrobenius{genus2}}}, 5, 1};
  const PhiNModule g = build_from_curve(good);
  CHECK(g.n.is_zero());
  CHECK(g.dims.total() == 4);

  const PhiNModule th = build_from_curve(theta_curve());
  CHECK(th.dims.total() == 4);
  CHECK(th.gram == QMatrix{{2, 1}, {1, 2}});
  const std::vector<Rational> diag{1, 1, 5, 5};
  CHECK(th.phi == QMatrix::diagonal(diag));
}

TEST_CASE("build_from_av examples") {
  const UniformizationData tate_u{1, QMatrix{{1}}, WeilMatrix::empty({5, 1}), 5, 1};
  CHECK(build_from_av(tate_u) == build_from_curve(tate_curve()));

  const UniformizationData good{0, QMatrix(), frobenius_of_elliptic({5, 1, 0}), 5, 1};
  CHECK(build_from_av(good).n.is_zero());
  CHECK(build_from_av(good).dims == WeightDims{0, 2, 0});

  const UniformizationData theta_u{2, QMatrix{{2, 1}, {1, 2}}, WeilMatrix::empty({5, 1}), 5, 1};
  CHECK(build_from_av(theta_u) == build_from_curve(theta_curve()));

  const UniformizationData bad{1, QMatrix{{0}}, WeilMatrix::empty({5, 1}), 5, 1};
  CHECK_THROWS_WITH_AS(build_from_av(bad), "gram not positive definite", ModuleError);
  const UniformizationData wrong_rank{2, QMatrix{{1}}, WeilMatrix::empty({5, 1}), 5, 1};
  CHECK_THROWS_AS(build_from_av(wrong_rank), ModuleError);
}

TEST_CASE("jacobian_data examples") {
  const UniformizationData t = jacobian_data(tate_curve());
  CHECK(t.torus_rank == 1);
  CHECK(t.gram == QMatrix{{1}});
  CHECK(t.b_frobenius.matrix().rows() == 0);

  const CurveInstance tree{two_vertex_tree(1),
                           {{"A", EllipticCurveSpec{5, 1, 0}}, {"B", EllipticCurveSpec{5, 0, 1}}}, 5, 1};
  const UniformizationData u = jacobian_data(tree);
  CHECK(u.torus_rank == 0);
  CHECK(u.b_frobenius.matrix().rows() == 4);
  CHECK(u.b_frobenius.matrix().block(0, 0, 2, 2) == QMatrix{{0, -5}, {1, 2}});
  CHECK(u.b_frobenius.matrix().block(2, 2, 2, 2) == QMatrix{{0, -5}, {1, 0}});

  const UniformizationData th = jacobian_data(theta_curve());
  CHECK(th.torus_rank == 2);
  CHECK(th.gram == QMatrix{{2, 1}, {1, 2}});
}

TEST_CASE("curve and Jacobian pipelines agree") {
  CHECK(check_curve_jacobian_agreement(tate_curve()));
  CHECK(check_curve_jacobian_agreement(theta_curve()));
  CHECK(check_curve_jacobian_agreement(banana_curve()));

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const CurveInstance c = random_curve_instance(rng, {});
    CHECK(check_curve_jacobian_agreement(c));
    const PhiNModule m = build_from_curve(c);
    const std::int64_t b1 = betti_one(c.graph);
    CHECK(static_cast<std::int64_t>(m.dims.total()) == 2 * (c.graph.total_genus() + b1));
    if (b1 == 0) {
      CHECK(m.n.is_zero());
      const HodgeNewtonReport hn = hodge_newton(m);
      CHECK(hn.t_newton == Rational(c.graph.total_genus()));
    }

    const CurveInstance r = relabeled(c);
    const PhiNModule mr = build_from_curve(r);
    CHECK(check_curve_jacobian_agreement(r));
    CHECK(determinant(mr.gram) == determinant(m.gram));
    CHECK(char_poly(mr.phi) == char_poly(m.phi));
    CHECK(rank(mr.n) == rank(m.n));
  }
}

TEST_CASE("instance validation errors") {
  CurveInstance missing = tate_curve();
  missing.components.clear();
  CHECK_THROWS_AS(build_from_curve(missing), CurveError);

  CurveInstance genus_mismatch = tate_curve();
  genus_mismatch.components["A"] = EllipticCurveSpec{5, 1, 0};
  CHECK_THROWS_AS(build_from_curve(genus_mismatch), CurveError);

  CurveInstance wrong_prime = banana_curve();
  wrong_prime.components["A"] = EllipticCurveSpec{7, 1, 0};
  CHECK_THROWS_AS(build_from_curve(wrong_prime), CurveError);

  CurveInstance identity{single_loop(1), {{"A", ExplicitFrobenius{QMatrix::identity(2)}}}, 5, 1};
  CHECK_THROWS_WITH_AS(build_from_curve(identity), "Weil validation failed: det != q^g", WeilError);

  CurveInstance stray = tate_curve();
  stray.components["Z"] = GenusZero{};
  CHECK_THROWS_AS(build_from_curve(stray), GraphError);

  CurveInstance disconnected{DualGraph({{"A", 0}, {"B", 0}}, {}), {{"A", GenusZero{}}, {"B", GenusZero{}}}, 5, 1};
  CHECK_THROWS_AS(build_from_curve(disconnected), GraphError);
}

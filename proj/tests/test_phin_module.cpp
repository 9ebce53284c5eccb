#include "phin/fuzz.hpp"
#include "phin/phin_module.hpp"

#include <doctest.h>

using namespace phin;

namespace {

PhiNModule tate() { return assemble(5, 1, QMatrix{{1}}, WeilMatrix::empty({5, 1})); }
PhiNModule ordinary_good() { return assemble(5, 1, QMatrix(), frobenius_of_elliptic({5, 1, 0})); }
PhiNModule supersingular_good() {
  return assemble(5, 1, QMatrix(), frobenius_of_elliptic({5, 0, 1}));
}
PhiNModule banana() { return assemble(5, 1, QMatrix{{2}}, frobenius_of_elliptic({5, 0, 1})); }
PhiNModule theta() { return assemble(5, 1, QMatrix{{2, 1}, {1, 2}}, WeilMatrix::empty({5, 1})); }

}  // namespace

TEST_CASE("assemble: Tate module") {
  const PhiNModule m = tate();
  CHECK(m.dims == WeightDims{1, 0, 1});
  CHECK(m.phi == QMatrix{{1, 0}, {0, 5}});
  CHECK(m.n == QMatrix{{0, 1}, {0, 0}});
  CHECK(m.fil1_dim == 1);
  CHECK(m.gram == QMatrix{{1}});
}

TEST_CASE("assemble: good reduction has N = 0") {
  const PhiNModule m = ordinary_good();
  CHECK(m.dims == WeightDims{0, 2, 0});
  CHECK(m.n.is_zero());
  CHECK(m.phi == QMatrix{{0, -5}, {1, 2}});
  CHECK(m.fil1_dim == 1);
}

TEST_CASE("assemble: banana graph with a genus-1 component") {
  const PhiNModule m = banana();
  CHECK(m.dims == WeightDims{1, 2, 1});
  QMatrix n(4, 4);
  n(0, 3) = 2;
  CHECK(m.n == n);
  CHECK(m.phi == QMatrix{{1, 0, 0, 0}, {0, 0, -5, 0}, {0, 1, 0, 0}, {0, 0, 0, 5}});
  CHECK(m.fil1_dim == 2);
}

TEST_CASE("assemble rejects bad input") {
  const WeilMatrix none = WeilMatrix::empty({5, 1});
  CHECK_THROWS_WITH_AS(assemble(5, 1, QMatrix{{0}}, none), "gram not positive definite", ModuleError);
  CHECK_THROWS_AS(assemble(5, 1, QMatrix{{2, 1}, {0, 2}}, none), ModuleError);
  CHECK_THROWS_AS(assemble(5, 1, QMatrix{{Rational(1, 2)}}, none), ModuleError);
  CHECK_THROWS_AS(assemble(7, 1, QMatrix{{1}}, none), ModuleError);
  CHECK_THROWS_AS(assemble(5, 2, QMatrix{{1}}, none), ModuleError);
  CHECK_THROWS_AS(assemble(6, 1, QMatrix{{1}}, none), ModuleError);
}

TEST_CASE("verify_relations") {
  CHECK(verify_relations(tate()).all_passed());
  CHECK(verify_relations(ordinary_good()).all_passed());
  CHECK(verify_relations(theta()).all_passed());

  PhiNModule broken = tate();
  broken.phi(1, 1) = 1;  // Phi on the toric piece should be q
  const RelationReport r = verify_relations(broken);
  CHECK_FALSE(r.passed("n_phi_relation"));
  CHECK(r.passed("n_squared_zero"));
  CHECK(r.passed("phi_invertible"));
  CHECK(r.passed("rank_n"));

  PhiNModule nilpotency = theta();
  nilpotency.n(2, 0) = 1;
  CHECK_FALSE(verify_relations(nilpotency).passed("n_squared_zero"));

  PhiNModule singular = tate();
  singular.phi(0, 0) = 0;
  CHECK_FALSE(verify_relations(singular).passed("phi_invertible"));
  CHECK_THROWS_AS(hodge_newton(singular), ModuleError);
}

TEST_CASE("hodge_newton examples") {
  const HodgeNewtonReport t = hodge_newton(tate());
  CHECK(t.t_newton == Rational(1));
  CHECK(t.t_hodge == 1);
  CHECK(t.newton == make_polygon({{Rational(0), 1}, {Rational(1), 1}}));
  CHECK(t.endpoints_equal);
  CHECK(t.newton_above_hodge);

  const HodgeNewtonReport s = hodge_newton(supersingular_good());
  CHECK(s.newton == make_polygon({{Rational(1, 2), 2}}));
  CHECK(s.hodge == make_polygon({{Rational(0), 1}, {Rational(1), 1}}));
  CHECK(s.newton.value_at(1) > s.hodge.value_at(1));
  CHECK(s.newton_above_hodge);
  CHECK(s.endpoints_equal);

  const HodgeNewtonReport e = hodge_newton(assemble(5, 1, QMatrix(), WeilMatrix::empty({5, 1})));
  CHECK(e.t_newton == Rational(0));
  CHECK(e.t_hodge == 0);
  CHECK(e.endpoints_equal);

  // f = 2: valuations are divided by f.
  const PhiNModule m = assemble(3, 2, QMatrix{{1}}, frobenius_of_elliptic({3, 1, 0}, 2));
  const HodgeNewtonReport r = hodge_newton(m);
  CHECK(r.t_newton == Rational(2));
  CHECK(r.t_hodge == 2);
  CHECK(r.newton_symmetric);
}

TEST_CASE("monodromy pairing and duality identity P N = monodromy") {
  CHECK(monodromy_pairing_matrix(tate()) == QMatrix{{0, 0}, {0, 1}});
  CHECK(monodromy_pairing_matrix(ordinary_good()).is_zero());
  CHECK(monodromy_pairing_matrix(theta()).block(2, 2, 2, 2) == QMatrix{{2, 1}, {1, 2}});

  CHECK(verify_monodromy_duality(tate()));
  CHECK(verify_monodromy_duality(ordinary_good()));
  CHECK(verify_monodromy_duality(theta()));
  CHECK(verify_monodromy_duality(banana()));

  const QMatrix p = duality_pairing(banana());
  CHECK(rank(p) == 4);
  CHECK(p == QMatrix{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}});

  PhiNModule broken = theta();
  broken.n(0, 3) = 5;
  CHECK_FALSE(verify_monodromy_duality(broken));
}

TEST_CASE("modules_equal") {
  CHECK(modules_equal(tate(), tate()));
  CHECK_FALSE(modules_equal(tate(), assemble(5, 1, QMatrix{{2}}, WeilMatrix::empty({5, 1}))));
  CHECK_FALSE(modules_equal(tate(), assemble(7, 1, QMatrix{{1}}, WeilMatrix::empty({7, 1}))));
}

TEST_CASE("module invariants on fuzzed Jacobian data") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const UniformizationData u = jacobian_data(random_curve_instance(rng, {}));
    const PhiNModule m = assemble(u.p, u.f, u.gram, u.b_frobenius);
    const auto [w0, w1, w2] = m.dims;
    CHECK(w0 == w2);
    CHECK(verify_relations(m).all_passed());
    // Image of N is the weight-0 block; N kills weight 0 and weight 1.
    CHECK(m.n.block(w0, 0, w1 + w2, m.dims.total()).is_zero());
    CHECK(m.n.block(0, 0, m.dims.total(), w0 + w1).is_zero());
    CHECK(rank(m.n) == w2);

    const HodgeNewtonReport hn = hodge_newton(m);
    CHECK(hn.t_newton == Rational(m.fil1_dim));
    CHECK(*padic_valuation(determinant(m.phi), m.p) == m.f * m.fil1_dim);
    CHECK(hn.newton_symmetric);
    CHECK(hn.newton_above_hodge);
    CHECK(verify_monodromy_duality(m));

    // Bilinearity: scaling gram by c scales both sides by c.
    const Rational c(static_cast<std::int64_t>(rng() % 5) + 2);
    const PhiNModule scaled = assemble(u.p, u.f, u.gram * c, u.b_frobenius);
    CHECK(verify_monodromy_duality(scaled));
    CHECK(duality_pairing(scaled) * scaled.n == c * (duality_pairing(m) * m.n));
    CHECK(monodromy_pairing_matrix(scaled) == c * monodromy_pairing_matrix(m));
  }
}

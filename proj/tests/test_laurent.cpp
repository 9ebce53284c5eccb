#include "phin/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace phin;

namespace {

LaurentPolynomial random_poly(std::mt19937_64& rng) {
  LaurentPolynomial f;
  const int terms = static_cast<int>(rng() % 6);
  for (int k = 0; k < terms; ++k) {
    const auto n = static_cast<std::int64_t>(rng() % 21) - 10;
    f.add(n, Rational(static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 5) + 1));
  }
  return f;
}

LaurentForm random_form(std::mt19937_64& rng) { return LaurentForm(random_poly(rng)); }

}  // namespace

TEST_CASE("residue examples") {
  CHECK(residue(LaurentForm{{-1, 1}}) == Rational(1));
  for (std::int64_t n : {-5, -2, 0, 1, 7}) CHECK(residue(LaurentForm{{n, 1}}) == Rational(0));
  CHECK(residue(LaurentForm{{-1, 3}, {1, 1}}) == Rational(3));
}

TEST_CASE("integrate: the two normalizations and the power rule") {
  const LogFunction z = integrate(LaurentForm{{0, 1}});
  CHECK(z.poly == LaurentPolynomial{{1, 1}});
  CHECK(z.log_coeff.is_zero());

  const LogFunction log_z = integrate(LaurentForm{{-1, 1}});
  CHECK(log_z.poly.is_zero());
  CHECK(log_z.log_coeff == Rational(1));

  CHECK(integrate(LaurentForm{{1, 2}}).poly == LaurentPolynomial{{2, 1}});
  CHECK(integrate(LaurentForm{{-3, 1}}).poly == LaurentPolynomial{{-2, Rational(-1, 2)}});
}

TEST_CASE("zero coefficients are never stored") {
  LaurentForm w{{2, 1}};
  w.add(2, -1);
  CHECK(w.is_zero());
  CHECK(LaurentForm{{3, 0}}.is_zero());
}

TEST_CASE("check_hypercocycle examples") {
  const LaurentForm w{{-1, 2}, {3, 1}};
  CHECK(check_hypercocycle(w, w, {}));
  CHECK(check_hypercocycle(LaurentForm{{0, 1}, {-1, 4}}, LaurentForm{{-1, 4}}, LaurentPolynomial{{1, 1}}));
  // dz/z is not d of any Laurent polynomial.
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    CHECK_FALSE(check_hypercocycle(LaurentForm{{-1, 1}}, {}, random_poly(rng)));
  }
}

TEST_CASE("splitting_correction examples") {
  const auto zero = splitting_correction({}, LogFunction{}, LogFunction{});
  CHECK(zero.constant_type);
  CHECK(zero.value == LogFunction{});

  const LogFunction sa{LaurentPolynomial{{1, 1}}, 1};
  const LogFunction sb{{}, 1};
  CHECK(splitting_correction(LaurentPolynomial{{1, 1}}, sa, sb).constant_type);

  const auto flagged = splitting_correction({}, LogFunction{{}, 1}, LogFunction{});
  CHECK_FALSE(flagged.constant_type);
  CHECK(flagged.value.log_coeff == Rational(-1));

  // A constant term in f_e is invisible modulo K.
  CHECK(splitting_correction(LaurentPolynomial{{0, 7}}, {}, {}).constant_type);
}

TEST_CASE("calculus identities on random Laurent data") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const LaurentForm w = random_form(rng);
    const LaurentPolynomial f = random_poly(rng);
    const LaurentPolynomial g = random_poly(rng);

    CHECK(differential(integrate(w)) == w);
    LaurentPolynomial f_mod_k = f;
    f_mod_k.add(0, -f.coefficient(0));
    CHECK(integrate(differential(f)).poly == f_mod_k);
    CHECK(integrate(differential(f)).log_coeff.is_zero());
    CHECK(residue(differential(f)).is_zero());

    const LaurentForm w2 = random_form(rng);
    CHECK(residue(w + w2) == residue(w) + residue(w2));
    CHECK(integrate(w + w2) == integrate(w) + integrate(w2));

    // Build a hypercocycle: wB arbitrary, wA = wB + d(fe).
    const LaurentForm wb = random_form(rng);
    const LaurentForm wa = wb + differential(g);
    REQUIRE(check_hypercocycle(wa, wb, g));
    CHECK(residue(wa) == residue(wb));
    CHECK(splitting_correction(g, integrate(wa), integrate(wb)).constant_type);
  }
}

#include "oracles.hpp"

#include "phin/exact_linalg.hpp"

#include <doctest.h>

using namespace phin;

namespace {
std::vector<Rational> R(std::initializer_list<std::int64_t> xs) {
  return {xs.begin(), xs.end()};
}
}  // namespace

TEST_CASE("rational is canonical and round-trips through text") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational::parse("-3/2") == r);
  CHECK(Rational::parse("10/5").to_string() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational x(static_cast<std::int64_t>(rng() % 2001) - 1000,
                     static_cast<std::int64_t>(rng() % 999) + 1);
    CHECK(Rational::parse(x.to_string()) == x);
  }
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(QMatrix::zero(2, 2)) == R({0, 0, 1}));
  CHECK(char_poly(QMatrix::identity(2)) == R({1, -2, 1}));
  CHECK(char_poly(QMatrix{{0, -5}, {1, 2}}) == R({5, -2, 1}));
  CHECK(char_poly(QMatrix()) == R({1}));
  CHECK_THROWS_AS(char_poly(QMatrix(2, 3)), DimensionError);
}

TEST_CASE("char_poly agrees with permutation-expansion det(tI - m)") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const QMatrix m = oracle::random_int_matrix(rng, n, n, -4, 4);
      const auto c = char_poly(m);
      REQUIRE(c.size() == n + 1);
      CHECK(c.back() == Rational(1));
      for (std::int64_t t = -3; t <= 3; ++t) {
        Rational value;
        for (std::size_t i = c.size(); i-- > 0;) value = value * Rational(t) + c[i];
        CHECK(value == oracle::char_poly_at(m, t));
      }
    }
  }
}

TEST_CASE("Cayley-Hamilton on random integer matrices 2x2..5x5") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      const QMatrix m = oracle::random_int_matrix(rng, n, n, -6, 6);
      CHECK(evaluate_poly(char_poly(m), m).is_zero());
    }
}

TEST_CASE("rank examples and rank-nullity") {
  CHECK(rank(QMatrix::zero(3, 3)) == 0);
  CHECK(rank(QMatrix::identity(3)) == 3);
  CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(QMatrix(0, 4)) == 0);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    QMatrix m = oracle::random_int_matrix(rng, r, c, -2, 2);
    // Make low-rank cases common: duplicate a row into another.
    if (r > 1 && trial % 2) m.set_block(r - 1, 0, m.block(0, 0, 1, c) * Rational(3, 2));
    const std::size_t k = rank(m);
    CHECK(k == oracle::gaussian_rank(m));
    const QMatrix ker = kernel_basis(m);
    CHECK(k + ker.cols() == m.cols());
    CHECK(k + nullity(m) == m.cols());
    CHECK((m * ker).is_zero());
    CHECK(rank(ker) == ker.cols());
  }
}

TEST_CASE("determinant matches the Leibniz oracle, including rationals") {
  std::mt19937_64 rng(19);
  for (std::size_t n = 0; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      QMatrix m = oracle::random_int_matrix(rng, n, n, -5, 5);
      if (n > 0) m(0, 0) = Rational(static_cast<std::int64_t>(rng() % 7) - 3, 5);
      CHECK(determinant(m) == oracle::leibniz_determinant(m));
    }
}

TEST_CASE("solve returns a solution or reports inconsistency") {
  const QMatrix a{{1, 2}, {2, 4}};
  CHECK_FALSE(solve(a, QMatrix{{1}, {3}}).has_value());
  const auto x = solve(a, QMatrix{{1}, {2}});
  REQUIRE(x.has_value());
  CHECK(a * *x == QMatrix{{1}, {2}});
  const QMatrix b{{2, 1}, {1, 3}};
  CHECK(b * *solve(b, QMatrix::identity(2)) == QMatrix::identity(2));
}

TEST_CASE("positive definiteness by leading minors") {
  CHECK(is_positive_definite(QMatrix()));
  CHECK(is_positive_definite(QMatrix{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_positive_definite(QMatrix{{0}}));
  CHECK_FALSE(is_positive_definite(QMatrix{{1, 2}, {2, 1}}));
  CHECK_FALSE(is_positive_definite(QMatrix{{1, 1}, {0, 1}}));
}

TEST_CASE("padic_valuation") {
  CHECK(padic_valuation(50, 5) == 2);
  CHECK(padic_valuation(Rational(3, 5), 5) == -1);
  CHECK_FALSE(padic_valuation(0, 5).has_value());
  CHECK(padic_valuation(5, 5) == 1);
  CHECK_THROWS_AS(padic_valuation(3, 6), std::invalid_argument);
}

TEST_CASE("newton_polygon examples") {
  // T^2 - 6T + 5 = (T - 1)(T - 5)
  CHECK(newton_polygon(R({5, -6, 1}), 5) ==
        make_polygon({{Rational(0), 1}, {Rational(1), 1}}));
  CHECK(newton_polygon(R({5, 0, 1}), 5) == make_polygon({{Rational(1, 2), 2}}));
  for (std::int64_t p : {2, 3, 7}) {
    CHECK(newton_polygon(R({-1, 3, -3, 1}), p) == make_polygon({{Rational(0), 3}}));
  }
  CHECK_THROWS_AS(newton_polygon(R({0, 0, 0}), 5), std::invalid_argument);
  CHECK_THROWS_AS(newton_polygon(R({0, 1}), 5), std::invalid_argument);
  CHECK_THROWS_AS(newton_polygon(R({1, 2}), 5), std::invalid_argument);
}

TEST_CASE("newton_polygon matches the brute-force hull and v_p(det)") {
  std::mt19937_64 rng(23);
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      QMatrix m = oracle::random_int_matrix(rng, n, n, -9, 9);
      for (std::size_t i = 0; i < n; ++i) m(i, i) *= Rational(p);
      const Rational det = determinant(m);
      if (det.is_zero()) continue;
      const auto coeffs = char_poly(m);
      const NewtonPolygon np = newton_polygon(coeffs, p);
      std::vector<Rational> flat;
      for (const auto& s : np.segments)
        for (std::int64_t k = 0; k < s.multiplicity; ++k) flat.push_back(s.slope);
      CHECK(flat == oracle::brute_force_slopes(coeffs, p));
      CHECK(np.length() == static_cast<std::int64_t>(n));
      CHECK(np.height() == Rational(*padic_valuation(det, p)));
    }
  }
}

TEST_CASE("parallel multiply matches the serial reference") {
  std::mt19937_64 rng(29);
  for (std::size_t n : {1u, 7u, 24u, 40u}) {
    QMatrix a = oracle::random_int_matrix(rng, n, n + 3, -9, 9);
    const QMatrix b = oracle::random_int_matrix(rng, n + 3, n, -9, 9);
    a(0, 0) = Rational(1, 3);
    CHECK(multiply(a, b) == reference::multiply(a, b));
  }
  CHECK_THROWS_AS(multiply(QMatrix(2, 3), QMatrix(2, 3)), DimensionError);
}

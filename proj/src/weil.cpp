#include "phin/weil.hpp"

#include "phin/exact_linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdlib>
#include <string>

namespace phin {

namespace {

constexpr double kModulusTolerance = 1e-9;

std::int64_t reduce_mod(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t cubic_rhs(std::int64_t x, std::int64_t a4, std::int64_t a6, std::int64_t p) {
  const std::int64_t x2 = mul_mod(x, x, p);
  return (mul_mod(x2, x, p) + mul_mod(a4, x, p) + a6) % p;
}

std::vector<char> square_table(std::int64_t p) {
  std::vector<char> is_square(static_cast<std::size_t>(p), 0);
  for (std::int64_t y = 0; y < p; ++y) is_square[static_cast<std::size_t>(mul_mod(y, y, p))] = 1;
  return is_square;
}

// Points above x: 1 when the right-hand side vanishes, 2 for a nonzero
// square, 0 otherwise.
std::int64_t points_above(std::int64_t rhs, const std::vector<char>& is_square) {
  if (rhs == 0) return 1;
  return is_square[static_cast<std::size_t>(rhs)] ? 2 : 0;
}

Archimedean approximate_moduli(const QMatrix& m, const Integer& q) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd dm(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      dm(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(dm, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) return Archimedean::violated;
  const double target = std::sqrt(q.get_d());
  for (const auto& ev : solver.eigenvalues()) {
    if (std::abs(std::abs(ev) - target) > kModulusTolerance * target) return Archimedean::violated;
  }
  return Archimedean::approximately_verified;
}

}  // namespace

Integer PrimePower::value() const {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
  return out;
}

WeilMatrix WeilMatrix::empty(PrimePower q) { return require_weil(QMatrix(), q); }

const char* to_string(Archimedean a) {
  switch (a) {
    case Archimedean::exact_pass: return "exact";
    case Archimedean::approximately_verified: return "approximately verified";
    case Archimedean::violated: return "violated";
    case Archimedean::not_applicable: return "not applicable";
  }
  return "unknown";
}

WeilReport validate_weil(const QMatrix& m, PrimePower q) {
  WeilReport report;
  auto reject = [&](std::string why) {
    report.failure = std::move(why);
    return report;
  };
  if (!is_prime(q.p) || q.f < 1) return reject("q is not a prime power p^f with f >= 1");
  if (!m.is_square()) return reject("matrix is not square");
  if (m.rows() % 2 != 0) return reject("matrix size is odd");
  if (!m.is_integral()) return reject("entries are not integers");

  const auto g = static_cast<std::int64_t>(m.rows() / 2);
  const Rational qv(q.value());
  if (determinant(m) != pow(qv, g)) return reject("det != q^g");

  const std::vector<Rational> c = char_poly(m);
  for (std::int64_t i = 0; i < g; ++i) {
    if (c[static_cast<std::size_t>(i)] != pow(qv, g - i) * c[static_cast<std::size_t>(2 * g - i)]) {
      return reject("functional equation fails at T^" + std::to_string(i));
    }
  }

  if (m.rows() == 2) {
    const Rational trace = m(0, 0) + m(1, 1);
    if (trace * trace > Rational(4) * qv) {
      report.archimedean = Archimedean::violated;
      return reject("archimedean check failed: trace^2 > 4q");
    }
    report.archimedean = Archimedean::exact_pass;
  }

  const QMatrix identity = QMatrix::identity(m.rows());
  if (determinant(m - qv * identity).is_zero()) return reject("q is an eigenvalue");
  if (determinant(m - identity).is_zero()) return reject("1 is an eigenvalue");

  if (m.rows() > 2) report.archimedean = approximate_moduli(m, q.value());
  report.matrix = WeilMatrix(q, m);
  return report;
}

WeilMatrix require_weil(const QMatrix& m, PrimePower q) {
  WeilReport r = validate_weil(m, q);
  if (!r.accepted()) throw WeilError("Weil validation failed: " + r.failure);
  return std::move(*r.matrix);
}

WeilMatrix direct_sum(const std::vector<WeilMatrix>& blocks, PrimePower q) {
  std::vector<QMatrix> mats;
  mats.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (!(b.q() == q)) throw WeilError("direct_sum: mixed q");
    mats.push_back(b.matrix());
  }
  return require_weil(QMatrix::block_diagonal(mats), q);
}

std::int64_t point_count_bound() {
  if (const char* env = std::getenv("PHIN_POINT_COUNT_BOUND")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 2) return v;
  }
  return kDefaultPointCountBound;
}

void check_curve(const EllipticCurveSpec& e, std::int64_t bound) {
  if (e.p % 2 == 0) throw CurveError("p is even");
  if (!is_prime(e.p)) throw CurveError("p is not prime");
  if (e.p > bound) {
    throw CurveError("p exceeds the point-counting bound " + std::to_string(bound));
  }
  const std::int64_t p = e.p;
  const std::int64_t a4 = reduce_mod(e.a4, p), a6 = reduce_mod(e.a6, p);
  // -16 (4 a4^3 + 27 a6^2) vanishes mod odd p iff 4 a4^3 + 27 a6^2 does.
  const std::int64_t disc =
      (4 * mul_mod(mul_mod(a4, a4, p), a4, p) + 27 * mul_mod(a6, a6, p)) % p;
  if (disc == 0) throw CurveError("singular curve (zero discriminant)");
}

PointCount count_points(const EllipticCurveSpec& e, std::int64_t bound) {
  check_curve(e, bound);
  const std::int64_t p = e.p;
  const std::int64_t a4 = reduce_mod(e.a4, p), a6 = reduce_mod(e.a6, p);
  const std::vector<char> is_square = square_table(p);
  std::int64_t affine = 0;
#pragma omp parallel for reduction(+ : affine) schedule(static) if (p > 2048)
  for (std::int64_t x = 0; x < p; ++x) {
    affine += points_above(cubic_rhs(x, a4, a6, p), is_square);
  }
  const std::int64_t n = affine + 1;
  return {n, p + 1 - n};
}

namespace reference {

PointCount count_points(const EllipticCurveSpec& e, std::int64_t bound) {
  check_curve(e, bound);
  const std::int64_t p = e.p;
  const std::int64_t a4 = reduce_mod(e.a4, p), a6 = reduce_mod(e.a6, p);
  const std::vector<char> is_square = square_table(p);
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) n += points_above(cubic_rhs(x, a4, a6, p), is_square);
  return {n, p + 1 - n};
}

}  // namespace reference

WeilMatrix frobenius_of_elliptic(const EllipticCurveSpec& e, std::int64_t f) {
  if (f < 1) throw WeilError("residue degree f must be >= 1");
  const PointCount pc = count_points(e);
  const QMatrix companion{{0, Rational(-e.p)}, {1, Rational(pc.trace)}};
  const QMatrix frob = power(companion, static_cast<unsigned>(f));
  WeilReport r = validate_weil(frob, PrimePower{e.p, f});
  if (!r.accepted()) {
    throw std::logic_error("elliptic Frobenius failed Weil validation: " + r.failure);
  }
  return std::move(*r.matrix);
}

}  // namespace phin

#pragma once

#include "phin/matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace phin {

class WeilError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// q = p^f.
struct PrimePower {
  std::int64_t p = 2;
  std::int64_t f = 1;

  Integer value() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct WeilReport;

/// Integer matrix of the (f-th power) Frobenius on H^1 of a good-reduction
/// component. Only validate_weil and the helpers below produce one.
class WeilMatrix {
 public:
  WeilMatrix() = default;

  const PrimePower& q() const { return q_; }
  const QMatrix& matrix() const { return matrix_; }
  std::int64_t genus() const { return static_cast<std::int64_t>(matrix_.rows() / 2); }
  /// Dimension of the Hodge filtration step Fil^1, always the genus.
  std::int64_t fil_dim() const { return genus(); }

  /// 0x0 matrix over q: the genus-0 component.
  static WeilMatrix empty(PrimePower q);

  friend bool operator==(const WeilMatrix&, const WeilMatrix&) = default;

 private:
  friend WeilReport validate_weil(const QMatrix& m, PrimePower q);
  WeilMatrix(PrimePower q, QMatrix m) : q_(q), matrix_(std::move(m)) {}

  PrimePower q_;
  QMatrix matrix_;
};

enum class Archimedean { exact_pass, approximately_verified, violated, not_applicable };

const char* to_string(Archimedean a);

struct WeilReport {
  std::optional<WeilMatrix> matrix;
  /// Name of the first failed exact condition; empty when accepted.
  std::string failure;
  Archimedean archimedean = Archimedean::not_applicable;

  bool accepted() const { return matrix.has_value(); }
};

/// Exact checks: even size, integral entries, det = q^g, the functional
/// equation a_i = q^(g-i) a_(2g-i), det(m - qI) != 0, det(m - I) != 0.
/// The modulus condition |alpha| = sqrt(q) is exact (trace^2 <= 4q) for 2x2
/// input and a rejection reason there; for larger input it is checked in
/// double precision and only reported.
WeilReport validate_weil(const QMatrix& m, PrimePower q);

/// validate_weil, throwing WeilError with the failure reason.
WeilMatrix require_weil(const QMatrix& m, PrimePower q);

WeilMatrix direct_sum(const std::vector<WeilMatrix>& blocks, PrimePower q);

/// Short Weierstrass y^2 = x^3 + a4 x + a6 over F_p, p odd.
struct EllipticCurveSpec {
  std::int64_t p = 3;
  std::int64_t a4 = 0;
  std::int64_t a6 = 0;

  friend bool operator==(const EllipticCurveSpec&, const EllipticCurveSpec&) = default;
};

struct PointCount {
  std::int64_t points = 0;
  std::int64_t trace = 0;

  friend bool operator==(const PointCount&, const PointCount&) = default;
};

constexpr std::int64_t kDefaultPointCountBound = 10000;

/// Bound on p for count_points: PHIN_POINT_COUNT_BOUND if set and valid,
/// otherwise kDefaultPointCountBound.
std::int64_t point_count_bound();

/// Throws CurveError on even/non-prime p, p over the bound, or a singular curve.
void check_curve(const EllipticCurveSpec& e, std::int64_t bound);

/// #E(F_p) including the point at infinity, and a = p + 1 - #E. The loop
/// over x runs in parallel (OpenMP).
PointCount count_points(const EllipticCurveSpec& e, std::int64_t bound = point_count_bound());

namespace reference {
/// Serial version of the same enumeration.
PointCount count_points(const EllipticCurveSpec& e, std::int64_t bound = point_count_bound());
}  // namespace reference

/// Companion matrix [[0, -p], [1, a]] of T^2 - aT + p, raised to the f-th
/// power when q = p^f with f > 1.
WeilMatrix frobenius_of_elliptic(const EllipticCurveSpec& e, std::int64_t f = 1);

}  // namespace phin

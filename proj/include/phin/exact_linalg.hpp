#pragma once

#include "phin/matrix.hpp"
#include "phin/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace phin {

/// Characteristic polynomial det(T*I - m), coefficients in ascending degree
/// (index i holds the coefficient of T^i); always monic of degree m.rows().
/// Hessenberg reduction followed by the standard recurrence, in exact
/// rational arithmetic.
std::vector<Rational> char_poly(const QMatrix& m);

/// Evaluates sum coeffs[i] * x^i at a square matrix (Horner).
QMatrix evaluate_poly(const std::vector<Rational>& coeffs, const QMatrix& m);

/// Bareiss fraction-free determinant (rows cleared to integers first).
Rational determinant(const QMatrix& m);

/// Exact rank via Bareiss elimination on integer-cleared rows.
std::size_t rank(const QMatrix& m);

inline std::size_t nullity(const QMatrix& m) { return m.cols() - rank(m); }

/// Basis of the right kernel {x : m x = 0}, as the columns of the result.
QMatrix kernel_basis(const QMatrix& m);

/// A particular solution x of a x = b (free variables set to zero), or
/// nullopt if the system is inconsistent.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

/// Exact positive-definiteness test for symmetric matrices via leading
/// principal minors. The 0x0 matrix is positive definite.
bool is_positive_definite(const QMatrix& m);

bool is_prime(std::int64_t n);

/// p-adic valuation; nullopt stands for +infinity (x = 0).
/// Throws std::invalid_argument if p is not prime.
std::optional<std::int64_t> padic_valuation(const Rational& x, std::int64_t p);

struct SlopeSegment {
  Rational slope;
  std::int64_t multiplicity = 0;

  friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/// Slopes in nondecreasing order, equal slopes merged.
struct NewtonPolygon {
  std::vector<SlopeSegment> segments;

  std::int64_t length() const;
  /// Sum of slope * multiplicity (the right endpoint's height).
  Rational height() const;
  /// Height of the polygon above abscissa x (0 <= x <= length()).
  Rational value_at(std::int64_t x) const;
  /// All slopes divided by d.
  NewtonPolygon scaled(std::int64_t d) const;
  /// True when the slope multiset is invariant under s -> total - s.
  bool symmetric_about(const Rational& total) const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Builds a polygon from unsorted (slope, multiplicity) pairs.
NewtonPolygon make_polygon(std::vector<SlopeSegment> segments);

/// Slopes of the roots of a monic polynomial (ascending coefficients):
/// the slope of a root alpha is v_p(alpha). Throws std::invalid_argument for
/// the zero polynomial, a non-monic input or a zero constant term.
NewtonPolygon newton_polygon(const std::vector<Rational>& coeffs, std::int64_t p);

}  // namespace phin

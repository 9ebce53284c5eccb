#pragma once

#include "phin/rational.hpp"

#include <cstdint>
#include <map>

namespace phin {

/// Finite-support map exponent -> coefficient; zero coefficients are never
/// stored.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(std::initializer_list<std::pair<const std::int64_t, Rational>> terms);

  const std::map<std::int64_t, Rational>& terms() const { return terms_; }
  Rational coefficient(std::int64_t n) const;
  void add(std::int64_t n, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const Rational& s);

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  std::map<std::int64_t, Rational> terms_;
};

/// A Laurent polynomial function f(z) on an annulus.
struct LaurentPolynomial : LaurentSeries {
  using LaurentSeries::LaurentSeries;
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(LaurentSeries s) : LaurentSeries(std::move(s)) {}
};

/// (sum a_n z^n) dz on an annulus.
struct LaurentForm : LaurentSeries {
  using LaurentSeries::LaurentSeries;
  LaurentForm() = default;
  explicit LaurentForm(LaurentSeries s) : LaurentSeries(std::move(s)) {}
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentForm operator+(LaurentForm a, const LaurentForm& b);
LaurentForm operator-(LaurentForm a, const LaurentForm& b);

/// poly + log_coeff * log z, modulo constants: the z^0 slot is never
/// populated.
struct LogFunction {
  LaurentPolynomial poly;
  Rational log_coeff;

  friend bool operator==(const LogFunction&, const LogFunction&) = default;
};

LogFunction operator+(const LogFunction& a, const LogFunction& b);
LogFunction operator-(const LogFunction& a, const LogFunction& b);

/// Coefficient of dz/z.
Rational residue(const LaurentForm& w);

LaurentForm differential(const LaurentPolynomial& f);
LaurentForm differential(const LogFunction& f);

/// The primitive: z^(n+1)/(n+1) for z^n dz (n != -1) and log z for dz/z.
LogFunction integrate(const LaurentForm& w);

/// (wA - wB) == d(fe) on the common annulus.
bool check_hypercocycle(const LaurentForm& wA, const LaurentForm& wB, const LaurentPolynomial& fe);

struct SplittingCorrection {
  LogFunction value;
  /// True when nothing but an (unrepresented) constant survives.
  bool constant_type = false;
};

/// fe - (sA - sB) modulo constants. A non-constant result is a legal output
/// that signals sA, sB were not primitives of a hypercocycle's forms.
SplittingCorrection splitting_correction(const LaurentPolynomial& fe, const LogFunction& sA,
                                         const LogFunction& sB);

}  // namespace phin

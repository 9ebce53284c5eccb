#include "phin/laurent.hpp"

namespace phin {

namespace {

LogFunction modulo_constants(LogFunction f) {
  f.poly.add(0, -f.poly.coefficient(0));
  return f;
}

}  // namespace

LaurentSeries::LaurentSeries(std::initializer_list<std::pair<const std::int64_t, Rational>> terms) {
  for (const auto& [n, c] : terms) add(n, c);
}

Rational LaurentSeries::coefficient(std::int64_t n) const {
  const auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentSeries::add(std::int64_t n, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  for (const auto& [n, c] : o.terms_) add(n, c);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  for (const auto& [n, c] : o.terms_) add(n, -c);
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [n, c] : terms_) c *= s;
  }
  return *this;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
  a += b;
  return a;
}
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
  a -= b;
  return a;
}
LaurentForm operator+(LaurentForm a, const LaurentForm& b) {
  a += b;
  return a;
}
LaurentForm operator-(LaurentForm a, const LaurentForm& b) {
  a -= b;
  return a;
}

LogFunction operator+(const LogFunction& a, const LogFunction& b) {
  return modulo_constants({a.poly + b.poly, a.log_coeff + b.log_coeff});
}

LogFunction operator-(const LogFunction& a, const LogFunction& b) {
  return modulo_constants({a.poly - b.poly, a.log_coeff - b.log_coeff});
}

Rational residue(const LaurentForm& w) { return w.coefficient(-1); }

LaurentForm differential(const LaurentPolynomial& f) {
  LaurentForm df;
  for (const auto& [n, c] : f.terms()) {
    if (n != 0) df.add(n - 1, c * Rational(n));
  }
  return df;
}

LaurentForm differential(const LogFunction& f) {
  LaurentForm df = differential(f.poly);
  df.add(-1, f.log_coeff);
  return df;
}

LogFunction integrate(const LaurentForm& w) {
  LogFunction s;
  for (const auto& [n, c] : w.terms()) {
    if (n == -1) {
      s.log_coeff = c;
    } else {
      s.poly.add(n + 1, c / Rational(n + 1));
    }
  }
  return s;
}

bool check_hypercocycle(const LaurentForm& wA, const LaurentForm& wB, const LaurentPolynomial& fe) {
  return wA - wB == differential(fe);
}

SplittingCorrection splitting_correction(const LaurentPolynomial& fe, const LogFunction& sA,
                                         const LogFunction& sB) {
  SplittingCorrection out;
  out.value = LogFunction{fe, Rational(0)} - (sA - sB);
  out.constant_type = out.value.poly.is_zero() && out.value.log_coeff.is_zero();
  return out;
}

}  // namespace phin

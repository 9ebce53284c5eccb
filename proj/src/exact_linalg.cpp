#include "phin/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace phin {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators. Row scaling preserves
// rank; the scale factors are returned so determinants can be corrected.
IntRows clear_denominators(const QMatrix& m, std::vector<Integer>* scales = nullptr) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  if (scales) scales->assign(m.rows(), Integer(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer d = m(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    if (scales) (*scales)[i] = l;
  }
  return out;
}

void divexact(Integer& x, const Integer& d) {
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Fraction-free (Bareiss) row echelon reduction in place. Returns the rank
// and, for square input, leaves the determinant up to `sign` in the last
// pivot position.
std::size_t bareiss(IntRows& a, std::size_t cols, int& sign) {
  const std::size_t rows = a.size();
  sign = 1;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        divexact(a[i][j], prev);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

struct Rref {
  QMatrix m;
  std::vector<std::size_t> pivots;
};

Rref reduced_row_echelon(QMatrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

std::vector<Rational> poly_mul_linear(const std::vector<Rational>& p, const Rational& root) {
  // (T - root) * p
  std::vector<Rational> out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= root * p[i];
  }
  return out;
}

}  // namespace

std::vector<Rational> char_poly(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("char_poly: matrix not square");
  const std::size_t n = m.rows();
  QMatrix h = m;

  // Similarity transform to upper Hessenberg form.
  for (std::size_t col = 1; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && h(piv, col - 1).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(col, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, piv), h(j, col));
    }
    const Rational t = h(col, col - 1);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (h(i, col - 1).is_zero()) continue;
      const Rational u = h(i, col - 1) / t;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(col, j);
      for (std::size_t j = 0; j < n; ++j) h(j, col) += u * h(j, i);
    }
  }

  // p_k = char poly of the leading k x k block.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = poly_mul_linear(p[k - 1], h(k - 1, k - 1));
    Rational t(1);
    for (std::size_t i = k - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      const Rational c = h(i - 1, k - 1) * t;
      if (c.is_zero()) continue;
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) p[k][d] -= c * p[i - 1][d];
    }
  }
  return p[n];
}

QMatrix evaluate_poly(const std::vector<Rational>& coeffs, const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("evaluate_poly: matrix not square");
  QMatrix acc = QMatrix::zero(m.rows(), m.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = multiply(acc, m);
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<Integer> scales;
  IntRows a = clear_denominators(m, &scales);
  int sign = 1;
  if (bareiss(a, n, sign) < n) return Rational(0);
  Integer scale = 1;
  for (const auto& s : scales) scale *= s;
  return Rational(a[n - 1][n - 1] * sign, scale);
}

std::size_t rank(const QMatrix& m) {
  IntRows a = clear_denominators(m);
  int sign = 1;
  return bareiss(a, m.cols(), sign);
}

QMatrix kernel_basis(const QMatrix& m) {
  const Rref r = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      basis(r.pivots[i], k) = -r.m(i, free_cols[k]);
    }
  }
  return basis;
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row count mismatch");
  QMatrix aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  const Rref r = reduced_row_echelon(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() >= a.cols()) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.m(i, a.cols() + j);
  return x;
}

bool is_positive_definite(const QMatrix& m) {
  if (!m.is_symmetric()) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    if (determinant(m.block(0, 0, k, k)).sign() <= 0) return false;
  }
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::int64_t> padic_valuation(const Rational& x, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p is not prime");
  if (x.is_zero()) return std::nullopt;
  const Integer prime(static_cast<long>(p));
  Integer num = x.numerator(), den = x.denominator(), rest;
  const auto vn = mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t());
  const auto vd = mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  return static_cast<std::int64_t>(vn) - static_cast<std::int64_t>(vd);
}

std::int64_t NewtonPolygon::length() const {
  std::int64_t n = 0;
  for (const auto& s : segments) n += s.multiplicity;
  return n;
}

Rational NewtonPolygon::height() const { return value_at(length()); }

Rational NewtonPolygon::value_at(std::int64_t x) const {
  Rational y;
  for (const auto& s : segments) {
    if (x <= 0) break;
    const std::int64_t step = std::min(x, s.multiplicity);
    y += s.slope * Rational(step);
    x -= step;
  }
  return y;
}

NewtonPolygon NewtonPolygon::scaled(std::int64_t d) const {
  NewtonPolygon out = *this;
  for (auto& s : out.segments) s.slope /= Rational(d);
  return out;
}

bool NewtonPolygon::symmetric_about(const Rational& total) const {
  std::vector<SlopeSegment> mirrored;
  for (const auto& s : segments) mirrored.push_back({total - s.slope, s.multiplicity});
  return make_polygon(std::move(mirrored)) == *this;
}

NewtonPolygon make_polygon(std::vector<SlopeSegment> segments) {
  std::map<Rational, std::int64_t> merged;
  for (const auto& s : segments) {
    if (s.multiplicity < 0) throw std::invalid_argument("negative slope multiplicity");
    if (s.multiplicity > 0) merged[s.slope] += s.multiplicity;
  }
  NewtonPolygon out;
  for (const auto& [slope, mult] : merged) out.segments.push_back({slope, mult});
  return out;
}

NewtonPolygon newton_polygon(const std::vector<Rational>& coeffs, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("newton_polygon: p is not prime");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); })) {
    throw std::invalid_argument("newton_polygon: zero polynomial");
  }
  if (coeffs.back() != Rational(1)) throw std::invalid_argument("newton_polygon: not monic");
  if (coeffs.front().is_zero()) {
    throw std::invalid_argument("newton_polygon: zero constant term (infinite slope)");
  }

  struct Pt {
    std::int64_t x;
    std::int64_t y;
  };
  std::vector<Pt> hull;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto v = padic_valuation(coeffs[i], p);
    if (!v) continue;
    const Pt pt{static_cast<std::int64_t>(i), *v};
    // Lower hull (Andrew's monotone chain); pop while the turn is not convex.
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      const std::int64_t cross = (b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  std::vector<SlopeSegment> segs;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const std::int64_t dx = hull[k].x - hull[k - 1].x;
    const std::int64_t dy = hull[k].y - hull[k - 1].y;
    segs.push_back({Rational(-dy, dx), dx});
  }
  return make_polygon(std::move(segs));
}

}  // namespace phin

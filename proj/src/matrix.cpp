#include "phin/matrix.hpp"

#include <sstream>

namespace phin {

namespace {

// Below this many scalar multiply-adds the thread fork costs more than it saves.
constexpr std::size_t kParallelWork = 4096;

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch");
  }
}

void require_product_shape(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimension mismatch");
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("QMatrix: entry count does not match rows*cols");
  }
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("QMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

QMatrix QMatrix::scalar(std::size_t n, const Rational& s) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Rational> diag) {
  QMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

QMatrix QMatrix::block_diagonal(std::span<const QMatrix> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  QMatrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                       std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionError("block out of range");
  QMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void QMatrix::set_block(std::size_t row0, std::size_t col0, const QMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) {
    throw DimensionError("set_block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

bool QMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

bool QMatrix::is_integral() const {
  for (const auto& x : entries_)
    if (!x.is_integer()) return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) { return multiply(a, b); }

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  require_product_shape(a, b);
  const std::size_t n = a.rows(), m = b.cols(), inner = a.cols();
  QMatrix c(n, m);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n * m * inner >= kParallelWork)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < inner; ++k) {
      const Rational& aik = a(r, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b(k, j).is_zero()) c(r, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

QMatrix power(const QMatrix& m, unsigned e) {
  if (!m.is_square()) throw DimensionError("power: matrix not square");
  QMatrix result = QMatrix::identity(m.rows());
  QMatrix base = m;
  while (e > 0) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1u;
    if (e) base = multiply(base, base);
  }
  return result;
}

namespace reference {

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  require_product_shape(a, b);
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

}  // namespace reference

}  // namespace phin

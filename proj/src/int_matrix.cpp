#include "subcocycle/int_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace subcocycle {

double log_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_big: argument must be positive");
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(static_cast<double>(value));
  const std::size_t shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
}

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

IntMatrix::IntMatrix(std::size_t dim, std::vector<BigInt> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) throw std::invalid_argument("IntMatrix: size mismatch");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("IntMatrix: rows must form a square");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::pow(unsigned exponent) const {
  IntMatrix result = identity(dim_);
  IntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

// Bareiss fraction-free elimination; every division is exact.
BigInt IntMatrix::determinant() const {
  if (dim_ == 0) return 1;
  std::vector<BigInt> a = data_;
  const std::size_t n = dim_;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

BigInt IntMatrix::entry_sum() const {
  BigInt s = 0;
  for (const auto& v : data_) s += v;
  return s;
}

BigInt IntMatrix::frobenius_norm_sq() const {
  BigInt s = 0;
  for (const auto& v : data_) s += v * v;
  return s;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& v : data_)
    if (v < 0) return false;
  return true;
}

Eigen::MatrixXd IntMatrix::to_double() const {
  Eigen::MatrixXd m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = static_cast<double>((*this)(i, j));
  return m;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  const std::size_t n = lhs.dim_;
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace subcocycle

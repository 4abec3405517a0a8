#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "subcocycle/int_matrix.hpp"
#include "subcocycle/torus.hpp"

namespace subcocycle {

using Frequency = std::vector<std::int64_t>;
using ComplexMatrix = Eigen::MatrixXcd;

/// exp(-2 pi i t), exact when 4t is an integer.
std::complex<double> unit_phase(double turns);

/// Sum of c_k exp(-2 pi i <k, xi>) over finitely many integer frequencies k,
/// with exact integer coefficients. Zero coefficients are never stored.
class TrigPoly {
 public:
  explicit TrigPoly(std::size_t dim = 0) : dim_(dim) {}

  static TrigPoly constant(std::size_t dim, const BigInt& value);
  static TrigPoly monomial(const Frequency& frequency, const BigInt& coefficient = 1);

  std::size_t dimension() const noexcept { return dim_; }
  const std::map<Frequency, BigInt>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Frequency& frequency, const BigInt& coefficient);
  BigInt coefficient(const Frequency& frequency) const;
  BigInt constant_term() const;
  BigInt coefficient_sum() const;

  /// Complex conjugate for integer coefficients: frequencies are negated.
  TrigPoly conjugate() const;
  /// Variables that occur with a nonzero exponent in some term.
  std::vector<std::size_t> active_variables() const;

  std::complex<double> evaluate(const TorusPoint& point) const;

  friend TrigPoly operator+(const TrigPoly& lhs, const TrigPoly& rhs);
  friend TrigPoly operator*(const TrigPoly& lhs, const TrigPoly& rhs);
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  std::size_t dim_;
  std::map<Frequency, BigInt> terms_;
};

/// Square matrix of trigonometric polynomials in `dimension()` variables.
class TrigMatrix {
 public:
  TrigMatrix() = default;
  explicit TrigMatrix(std::size_t dim);

  std::size_t dimension() const noexcept { return dim_; }
  TrigPoly& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const TrigPoly& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  ComplexMatrix evaluate(const TorusPoint& point) const;

  friend TrigMatrix operator*(const TrigMatrix& lhs, const TrigMatrix& rhs);
  friend bool operator==(const TrigMatrix&, const TrigMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<TrigPoly> entries_;
};

}  // namespace subcocycle

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace subcocycle {

using BigInt = boost::multiprecision::cpp_int;

/// Natural log of a positive big integer, accurate to double precision for any size.
double log_big(const BigInt& value);

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::size_t dim, std::vector<BigInt> row_major);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t dim);

  std::size_t dimension() const noexcept { return dim_; }

  BigInt& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  IntMatrix transpose() const;
  IntMatrix pow(unsigned exponent) const;

  BigInt trace() const;
  BigInt determinant() const;
  BigInt entry_sum() const;
  BigInt frobenius_norm_sq() const;
  bool is_nonnegative() const;

  Eigen::MatrixXd to_double() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

std::string to_string(const IntMatrix& m);

}  // namespace subcocycle

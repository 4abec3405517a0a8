#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcocycle/int_matrix.hpp"

namespace subcocycle {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(std::size_t degree, const BigInt& coefficient = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const;

  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool is_palindromic() const;
  BigInt content() const;
  /// Divided by its content, normalized to a positive leading coefficient.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  BigInt evaluate(const BigInt& x) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  friend IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(const BigInt& scalar, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Human-readable form such as `x^3 - 4x^2 + x + 3`.
std::string to_string(const IntPolynomial& p, char variable = 'x');

/// Parses a comma-separated coefficient list, constant term first ("5,-14,5").
IntPolynomial parse_coefficients(std::string_view text);

/// Quotient when `divisor` divides `dividend` in Z[x], otherwise nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// Greatest common divisor in Z[x] (primitive, positive leading coefficient).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

struct SquareFreeFactor {
  IntPolynomial factor;
  unsigned multiplicity;
};

/// p = c * prod factor_i^{multiplicity_i} with pairwise coprime squarefree
/// primitive factors (the content c is dropped).
std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p);

/// det(xI - A), computed exactly by the Faddeev-LeVerrier recurrence.
IntPolynomial char_poly(const IntMatrix& a);

}  // namespace subcocycle

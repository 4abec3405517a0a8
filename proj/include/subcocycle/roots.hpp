#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "subcocycle/int_matrix.hpp"
#include "subcocycle/polynomial.hpp"

namespace subcocycle {

struct Root {
  std::complex<double> value;
  unsigned multiplicity = 1;
  /// Upper bound on |p(value)| including rounding in its evaluation.
  double residual_bound = 0.0;
  /// Estimated distance to the exact root (first-order, from Newton's step).
  double error_bound = 0.0;
};

/// Complex roots of an integer polynomial, one entry per distinct root.
struct RootSet {
  std::vector<Root> roots;

  std::size_t count() const;  // with multiplicity
  std::vector<std::complex<double>> expanded() const;
  double total_residual() const;
};

/// Companion-matrix eigenvalues of each squarefree factor, polished by
/// Newton's method in extended precision. Throws for constant input.
RootSet roots(const IntPolynomial& p);

struct PerronData {
  double eigenvalue;
  std::vector<double> eigenvector;  // positive, normalized to unit sum
};

/// Dominant eigenvalue and right eigenvector of a primitive nonnegative
/// matrix: power iteration, then Newton on the exact characteristic
/// polynomial. Throws std::domain_error for non-primitive input.
PerronData perron_data(const IntMatrix& a);

}  // namespace subcocycle

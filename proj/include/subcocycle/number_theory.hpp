#pragma once

#include <vector>

#include "subcocycle/int_matrix.hpp"
#include "subcocycle/polynomial.hpp"

namespace subcocycle {

/// Decides irreducibility over Q for degree <= 12 by searching root subsets
/// for integer factors and confirming candidates by exact division.
/// Throws std::domain_error above the degree guard and UndecidedError when
/// the root precision cannot separate a candidate from an integer factor.
bool is_irreducible_over_q(const IntPolynomial& p);

/// theta_1^n != theta_j^n for every other eigenvalue (with multiplicity).
bool dominance_condition(const IntMatrix& a, unsigned n);

/// Whether A^n has an irreducible characteristic polynomial; the dominance
/// condition is checked first and the answer is confirmed exactly on A^n.
bool power_irreducible(const IntMatrix& a, unsigned n);

enum class NumberKind { pisot, salem, neither };

struct NumberClass {
  NumberKind kind = NumberKind::neither;
  double value = 0.0;                   // largest real root
  std::vector<double> conjugate_moduli;  // the remaining roots
  bool exact = false;                    // decided by the reciprocal-quartic route
};

/// Classifies the largest real root of a monic irreducible polynomial.
NumberClass classify_number(const IntPolynomial& p);

const char* to_string(NumberKind kind);

/// For a monic palindromic quartic x^4 + a x^3 + b x^2 + a x + 1, returns
/// y^2 + a y + (b - 2), whose roots are lambda + 1/lambda.
IntPolynomial reciprocal_reduce(const IntPolynomial& p);
/// The same quadratic in w = y - 2, whose roots are lambda + 1/lambda - 2.
IntPolynomial reciprocal_reduce_shifted(const IntPolynomial& p);

}  // namespace subcocycle

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "subcocycle/substitution.hpp"
#include "subcocycle/torus.hpp"
#include "subcocycle/trig_poly.hpp"

namespace subcocycle {

enum class MatrixNorm { frobenius, operator2 };

double matrix_norm(const ComplexMatrix& m, MatrixNorm norm = MatrixNorm::frobenius);

/// Entry (b, c) has one unit term per occurrence of c in the image of b; its
/// frequency is the letter-count vector of the prefix before that occurrence.
TrigMatrix build_cocycle_matrix(const Substitution& sub);

ComplexMatrix evaluate(const TrigMatrix& m, const TorusPoint& point);
/// Convenience overload; the coordinates are reduced mod 1 exactly.
ComplexMatrix evaluate(const TrigMatrix& m, std::span<const double> xi);

/// Sum over entries of |M_bc|^2, expanded exactly.
TrigPoly frobenius_norm_sq_poly(const TrigMatrix& m);

/// Product rescaled to unit Frobenius norm; log ||product|| = log_scale + log ||unit||.
struct RescaledProduct {
  ComplexMatrix unit;
  double log_scale = 0.0;
};

/// The spectral cocycle of a substitution compiled for repeated evaluation
/// along orbits of xi -> S^t xi. Immutable and safe to share between threads.
class SpectralCocycle {
 public:
  explicit SpectralCocycle(const Substitution& sub);

  std::size_t dimension() const noexcept { return dim_; }
  const TrigMatrix& matrix() const noexcept { return matrix_; }
  const IntMatrix& transpose_matrix() const noexcept { return endo_.matrix(); }
  const ToralEndomorphism& endomorphism() const noexcept { return endo_; }

  ComplexMatrix evaluate(const TorusPoint& point) const;
  void evaluate_into(const TorusPoint& point, ComplexMatrix& out) const;
  TorusPoint step(const TorusPoint& point) const { return endo_(point); }

  /// M(E^{n-1} xi) ... M(E xi) M(xi), multiplied right to left.
  /// Throws NumericalError when an entry overflows.
  ComplexMatrix product(const TorusPoint& point, unsigned n) const;
  /// Same product with the running matrix renormalized after every factor.
  /// Throws NumericalError if the product becomes exactly zero.
  RescaledProduct rescaled_product(const TorusPoint& point, unsigned n) const;

 private:
  struct Term {
    std::size_t row;
    std::size_t col;
    Frequency frequency;
    double coefficient;
    bool is_constant;
  };

  std::size_t dim_;
  TrigMatrix matrix_;
  std::vector<Term> terms_;
  ToralEndomorphism endo_;
};

ComplexMatrix cocycle_product(const Substitution& sub, const TorusPoint& point, unsigned n);
RescaledProduct rescaled_cocycle_product(const Substitution& sub, const TorusPoint& point, unsigned n);

}  // namespace subcocycle

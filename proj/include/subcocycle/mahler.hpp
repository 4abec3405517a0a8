#pragma once

#include <cstddef>
#include <cstdint>

#include "subcocycle/polynomial.hpp"
#include "subcocycle/trig_poly.hpp"

namespace subcocycle {

/// Logarithmic Mahler measure by Jensen's formula:
/// log|leading| + sum over roots of log max(|alpha|, 1).
double mahler_jensen(const IntPolynomial& p);

struct QuadratureResult {
  double value = 0.0;
  std::uint64_t nodes = 0;
  std::uint64_t singular_nodes = 0;
};

/// Integral of log|q| over the torus by the periodic trapezoidal rule on a
/// half-step-offset tensor grid with `grid_size` nodes per active variable.
/// Nodes with |q| < 1e-14 are dropped and counted.
QuadratureResult mahler_quadrature(const TrigPoly& q, std::size_t grid_size);

/// One-variable trigonometric polynomial with the coefficients of p.
TrigPoly to_trig_poly(const IntPolynomial& p);

}  // namespace subcocycle

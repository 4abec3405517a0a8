#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "subcocycle/int_matrix.hpp"

namespace subcocycle {

/// A point of the torus R^d / Z^d held as exact residues r_j / m.
///
/// Two families of denominators are used. Dyadic points (m = 2^64) carry
/// every double in [0, 1) exactly and are what `from_reals` produces.
/// Points with a prime denominator (`kOrbitModulus` by default) are used
/// for long orbits: integer matrices act on (1/m)Z^d / Z^d exactly, and a
/// prime modulus keeps that action invertible for any nonzero determinant
/// below m, where powers of two would collapse orbits under even
/// determinants. Small denominators model genuinely rational points.
class TorusPoint {
 public:
  static constexpr std::uint64_t kOrbitModulus = (std::uint64_t{1} << 61) - 1;

  TorusPoint() = default;

  static TorusPoint zero(std::size_t dim);
  /// Reduces each coordinate by x - floor(x) and stores it exactly (dyadic).
  static TorusPoint from_reals(std::span<const double> coords);
  /// Coordinates numerators[j] / denominator, reduced mod 1.
  static TorusPoint from_rational(std::span<const std::int64_t> numerators, std::uint64_t denominator);
  /// Nearest point of (1/modulus) Z^d to the reduced coordinates.
  static TorusPoint lift(std::span<const double> coords, std::uint64_t modulus = kOrbitModulus);
  /// Raw residues; modulus 0 stands for 2^64.
  static TorusPoint from_residues(std::vector<std::uint64_t> residues, std::uint64_t modulus);

  std::size_t dimension() const noexcept { return residues_.size(); }
  bool is_dyadic() const noexcept { return modulus_ == 0; }
  /// Common denominator; 0 encodes 2^64.
  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }

  double coordinate(std::size_t j) const;
  std::vector<double> coordinates() const;

  /// <k, xi> mod 1 computed exactly, returned in [-1/2, 1/2).
  double phase(std::span<const std::int64_t> frequency) const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  TorusPoint(std::vector<std::uint64_t> residues, std::uint64_t modulus)
      : residues_(std::move(residues)), modulus_(modulus) {}

  std::vector<std::uint64_t> residues_;
  std::uint64_t modulus_ = 0;
};

/// xi -> A xi (mod Z^d) for an integer matrix A, exact on TorusPoint residues.
class ToralEndomorphism {
 public:
  ToralEndomorphism() = default;
  explicit ToralEndomorphism(IntMatrix matrix);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dimension() const noexcept { return matrix_.dimension(); }

  TorusPoint operator()(const TorusPoint& point) const;
  /// n-fold application.
  TorusPoint iterate(const TorusPoint& point, std::uint64_t n) const;

 private:
  IntMatrix matrix_;
  std::vector<std::uint64_t> mod_2_64_;
  std::vector<std::uint64_t> mod_orbit_;
};

/// One step of the torus endomorphism xi -> S^t xi (mod Z^d), where the
/// argument is already the transposed substitution matrix.
TorusPoint endomorphism_step(const IntMatrix& transposed, const TorusPoint& point);

}  // namespace subcocycle

#include "subcocycle/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace subcocycle {

namespace {

using u128 = unsigned __int128;

std::uint64_t reduce_big(const BigInt& value, std::uint64_t modulus) {
  if (modulus == 0) {
    const BigInt two64 = BigInt(1) << 64;
    BigInt r = value % two64;
    if (r < 0) r += two64;
    return static_cast<std::uint64_t>(r);
  }
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::uint64_t>(r);
}

double reduced_fraction(double x) {
  double frac = x - std::floor(x);
  if (!(frac < 1.0)) frac = 0.0;  // -tiny rounds up to exactly 1
  return frac;
}

}  // namespace

TorusPoint TorusPoint::zero(std::size_t dim) { return TorusPoint(std::vector<std::uint64_t>(dim, 0), 0); }

TorusPoint TorusPoint::from_reals(std::span<const double> coords) {
  std::vector<std::uint64_t> r;
  r.reserve(coords.size());
  for (double x : coords) {
    if (!std::isfinite(x)) throw std::invalid_argument("TorusPoint: coordinate is not finite");
    r.push_back(static_cast<std::uint64_t>(std::ldexp(reduced_fraction(x), 64)));
  }
  return TorusPoint(std::move(r), 0);
}

TorusPoint TorusPoint::from_rational(std::span<const std::int64_t> numerators, std::uint64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("TorusPoint: zero denominator");
  std::vector<std::uint64_t> r;
  r.reserve(numerators.size());
  for (std::int64_t n : numerators) r.push_back(reduce_big(BigInt(n), denominator));
  return TorusPoint(std::move(r), denominator);
}

TorusPoint TorusPoint::lift(std::span<const double> coords, std::uint64_t modulus) {
  if (modulus == 0) return from_reals(coords);
  std::vector<std::uint64_t> r;
  r.reserve(coords.size());
  for (double x : coords) {
    if (!std::isfinite(x)) throw std::invalid_argument("TorusPoint: coordinate is not finite");
    const long double scaled = static_cast<long double>(reduced_fraction(x)) * static_cast<long double>(modulus);
    std::uint64_t v = static_cast<std::uint64_t>(std::llroundl(scaled));
    if (v >= modulus) v -= modulus;
    r.push_back(v);
  }
  return TorusPoint(std::move(r), modulus);
}

TorusPoint TorusPoint::from_residues(std::vector<std::uint64_t> residues, std::uint64_t modulus) {
  if (modulus != 0)
    for (auto& v : residues) v %= modulus;
  return TorusPoint(std::move(residues), modulus);
}

double TorusPoint::coordinate(std::size_t j) const {
  const std::uint64_t r = residues_.at(j);
  double x = modulus_ == 0 ? std::ldexp(static_cast<double>(r), -64)
                           : static_cast<double>(static_cast<long double>(r) / static_cast<long double>(modulus_));
  if (!(x < 1.0)) x = std::nextafter(1.0, 0.0);
  return x;
}

std::vector<double> TorusPoint::coordinates() const {
  std::vector<double> out(residues_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = coordinate(j);
  return out;
}

double TorusPoint::phase(std::span<const std::int64_t> frequency) const {
  if (frequency.size() != residues_.size()) throw std::invalid_argument("phase: dimension mismatch");
  if (modulus_ == 0) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < residues_.size(); ++j)
      acc += static_cast<std::uint64_t>(frequency[j]) * residues_[j];  // wraps mod 2^64
    return std::ldexp(static_cast<double>(static_cast<std::int64_t>(acc)), -64);
  }
  const std::uint64_t m = modulus_;
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < residues_.size(); ++j) {
    const std::int64_t k = frequency[j];
    if (k == 0 || residues_[j] == 0) continue;
    std::uint64_t km = k >= 0 ? static_cast<std::uint64_t>(k) % m
                              : (m - (static_cast<std::uint64_t>(-(k + 1)) + 1) % m) % m;
    acc = static_cast<std::uint64_t>((static_cast<u128>(acc) + static_cast<u128>(km) * residues_[j]) % m);
  }
  // Signed representative in [-m/2, m/2).
  const long double num = acc >= (m + 1) / 2 ? -static_cast<long double>(m - acc) : static_cast<long double>(acc);
  return static_cast<double>(num / static_cast<long double>(m));
}

ToralEndomorphism::ToralEndomorphism(IntMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t d = matrix_.dimension();
  mod_2_64_.resize(d * d);
  mod_orbit_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      mod_2_64_[i * d + j] = reduce_big(matrix_(i, j), 0);
      mod_orbit_[i * d + j] = reduce_big(matrix_(i, j), TorusPoint::kOrbitModulus);
    }
}

TorusPoint ToralEndomorphism::operator()(const TorusPoint& point) const {
  const std::size_t d = matrix_.dimension();
  if (point.dimension() != d) throw std::invalid_argument("endomorphism: dimension mismatch");
  const auto& r = point.residues();
  const std::uint64_t m = point.modulus();
  std::vector<std::uint64_t> out(d, 0);
  if (m == 0) {
    for (std::size_t i = 0; i < d; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += mod_2_64_[i * d + j] * r[j];
      out[i] = acc;
    }
    return TorusPoint::from_residues(std::move(out), 0);
  }
  const bool cached = m == TorusPoint::kOrbitModulus;
  for (std::size_t i = 0; i < d; ++i) {
    u128 acc = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint64_t a = cached ? mod_orbit_[i * d + j] : reduce_big(matrix_(i, j), m);
      acc = (acc + static_cast<u128>(a) * r[j]) % m;
    }
    out[i] = static_cast<std::uint64_t>(acc);
  }
  return TorusPoint::from_residues(std::move(out), m);
}

TorusPoint ToralEndomorphism::iterate(const TorusPoint& point, std::uint64_t n) const {
  TorusPoint p = point;
  for (std::uint64_t i = 0; i < n; ++i) p = (*this)(p);
  return p;
}

TorusPoint endomorphism_step(const IntMatrix& transposed, const TorusPoint& point) {
  return ToralEndomorphism(transposed)(point);
}

}  // namespace subcocycle

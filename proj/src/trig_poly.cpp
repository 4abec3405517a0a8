#include "subcocycle/trig_poly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subcocycle {

std::complex<double> unit_phase(double turns) {
  const double quarters = turns * 4.0;
  if (quarters == std::floor(quarters)) {
    switch (((static_cast<long long>(quarters) % 4) + 4) % 4) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, -1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, 1.0};
    }
  }
  const double angle = -2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

TrigPoly TrigPoly::constant(std::size_t dim, const BigInt& value) {
  TrigPoly p(dim);
  p.add_term(Frequency(dim, 0), value);
  return p;
}

TrigPoly TrigPoly::monomial(const Frequency& frequency, const BigInt& coefficient) {
  TrigPoly p(frequency.size());
  p.add_term(frequency, coefficient);
  return p;
}

void TrigPoly::add_term(const Frequency& frequency, const BigInt& coefficient) {
  if (frequency.size() != dim_) throw std::invalid_argument("TrigPoly: frequency dimension mismatch");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(frequency, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt TrigPoly::coefficient(const Frequency& frequency) const {
  auto it = terms_.find(frequency);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt TrigPoly::constant_term() const { return coefficient(Frequency(dim_, 0)); }

BigInt TrigPoly::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

TrigPoly TrigPoly::conjugate() const {
  TrigPoly out(dim_);
  for (const auto& [k, c] : terms_) {
    Frequency neg(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) neg[j] = -k[j];
    out.terms_.emplace(std::move(neg), c);
  }
  return out;
}

std::vector<std::size_t> TrigPoly::active_variables() const {
  std::vector<char> used(dim_, 0);
  for (const auto& [k, c] : terms_)
    for (std::size_t j = 0; j < dim_; ++j)
      if (k[j] != 0) used[j] = 1;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim_; ++j)
    if (used[j]) out.push_back(j);
  return out;
}

std::complex<double> TrigPoly::evaluate(const TorusPoint& point) const {
  if (point.dimension() != dim_) throw std::invalid_argument("TrigPoly::evaluate: dimension mismatch");
  std::complex<double> sum = 0.0;
  for (const auto& [k, c] : terms_) sum += static_cast<double>(c) * unit_phase(point.phase(k));
  return sum;
}

TrigPoly operator+(const TrigPoly& lhs, const TrigPoly& rhs) {
  if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("TrigPoly: dimension mismatch");
  TrigPoly out = lhs;
  for (const auto& [k, c] : rhs.terms_) out.add_term(k, c);
  return out;
}

TrigPoly operator*(const TrigPoly& lhs, const TrigPoly& rhs) {
  if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("TrigPoly: dimension mismatch");
  TrigPoly out(lhs.dim_);
  Frequency sum(lhs.dim_);
  for (const auto& [ka, ca] : lhs.terms_)
    for (const auto& [kb, cb] : rhs.terms_) {
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = ka[j] + kb[j];
      out.add_term(sum, ca * cb);
    }
  return out;
}

TrigMatrix::TrigMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, TrigPoly(dim)) {}

ComplexMatrix TrigMatrix::evaluate(const TorusPoint& point) const {
  ComplexMatrix out(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j).evaluate(point);
  return out;
}

TrigMatrix operator*(const TrigMatrix& lhs, const TrigMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("TrigMatrix: dimension mismatch");
  const std::size_t n = lhs.dim_;
  TrigMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs(i, k).is_zero() || rhs(k, j).is_zero()) continue;
        out(i, j) = out(i, j) + lhs(i, k) * rhs(k, j);
      }
  return out;
}

}  // namespace subcocycle

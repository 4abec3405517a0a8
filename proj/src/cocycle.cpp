#include "subcocycle/cocycle.hpp"

#include <cmath>
#include <stdexcept>

#include "subcocycle/error.hpp"

namespace subcocycle {

double matrix_norm(const ComplexMatrix& m, MatrixNorm norm) {
  if (norm == MatrixNorm::frobenius) return m.norm();
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

TrigMatrix build_cocycle_matrix(const Substitution& sub) {
  const std::size_t d = sub.alphabet_size();
  TrigMatrix m(d);
  for (std::size_t b = 0; b < d; ++b) {
    Frequency prefix(d, 0);
    for (Letter c : sub.image(static_cast<Letter>(b))) {
      m(b, c).add_term(prefix, 1);
      ++prefix[c];
    }
  }
  return m;
}

ComplexMatrix evaluate(const TrigMatrix& m, const TorusPoint& point) {
  if (point.dimension() != m.dimension()) throw std::invalid_argument("evaluate: dimension mismatch");
  return m.evaluate(point);
}

ComplexMatrix evaluate(const TrigMatrix& m, std::span<const double> xi) {
  if (xi.size() != m.dimension()) throw std::invalid_argument("evaluate: dimension mismatch");
  return m.evaluate(TorusPoint::from_reals(xi));
}

TrigPoly frobenius_norm_sq_poly(const TrigMatrix& m) {
  TrigPoly sum(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      const TrigPoly& e = m(i, j);
      if (!e.is_zero()) sum = sum + e * e.conjugate();
    }
  return sum;
}

SpectralCocycle::SpectralCocycle(const Substitution& sub)
    : dim_(sub.alphabet_size()),
      matrix_(build_cocycle_matrix(sub)),
      endo_(substitution_matrix(sub).transpose()) {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : matrix_(i, j).terms()) {
        bool constant = true;
        for (auto v : k) constant = constant && v == 0;
        terms_.push_back({i, j, k, static_cast<double>(c), constant});
      }
}

void SpectralCocycle::evaluate_into(const TorusPoint& point, ComplexMatrix& out) const {
  if (point.dimension() != dim_) throw std::invalid_argument("evaluate: dimension mismatch");
  out.setZero(dim_, dim_);
  for (const auto& t : terms_) {
    if (t.is_constant) {
      out(t.row, t.col) += t.coefficient;
      continue;
    }
    out(t.row, t.col) += t.coefficient * unit_phase(point.phase(t.frequency));
  }
}

ComplexMatrix SpectralCocycle::evaluate(const TorusPoint& point) const {
  ComplexMatrix out;
  evaluate_into(point, out);
  return out;
}

ComplexMatrix SpectralCocycle::product(const TorusPoint& point, unsigned n) const {
  if (n == 0) throw std::invalid_argument("cocycle product: n must be at least 1");
  ComplexMatrix acc = evaluate(point);
  ComplexMatrix factor;
  TorusPoint x = point;
  for (unsigned i = 1; i < n; ++i) {
    x = endo_(x);
    evaluate_into(x, factor);
    acc = factor * acc;
  }
  if (!acc.allFinite())
    throw NumericalError("cocycle product overflowed; use the rescaled product for n = " + std::to_string(n));
  return acc;
}

RescaledProduct SpectralCocycle::rescaled_product(const TorusPoint& point, unsigned n) const {
  if (n == 0) throw std::invalid_argument("cocycle product: n must be at least 1");
  RescaledProduct out;
  ComplexMatrix factor;
  TorusPoint x = point;
  for (unsigned i = 0; i < n; ++i) {
    if (i) x = endo_(x);
    evaluate_into(x, factor);
    if (i == 0)
      out.unit = factor;
    else
      out.unit = factor * out.unit;
    const double scale = out.unit.norm();
    if (!(scale > 0.0) || !std::isfinite(scale))
      throw NumericalError("cocycle product degenerated at step " + std::to_string(i + 1));
    out.unit /= scale;
    out.log_scale += std::log(scale);
  }
  return out;
}

ComplexMatrix cocycle_product(const Substitution& sub, const TorusPoint& point, unsigned n) {
  return SpectralCocycle(sub).product(point, n);
}

RescaledProduct rescaled_cocycle_product(const Substitution& sub, const TorusPoint& point, unsigned n) {
  return SpectralCocycle(sub).rescaled_product(point, n);
}

}  // namespace subcocycle

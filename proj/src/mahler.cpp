#include "subcocycle/mahler.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "subcocycle/error.hpp"
#include "subcocycle/roots.hpp"

namespace subcocycle {

namespace {

constexpr double kSingularThreshold = 1e-14;
constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 26;

}  // namespace

double mahler_jensen(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("mahler_jensen: zero polynomial");
  double value = log_big(abs(p.leading()));
  if (p.degree() < 1) return value;
  for (const Root& r : roots(p).roots) {
    const double modulus = std::abs(r.value);
    if (modulus > 1) value += r.multiplicity * std::log(modulus);
  }
  return value;
}

QuadratureResult mahler_quadrature(const TrigPoly& q, std::size_t grid_size) {
  if (q.is_zero()) throw std::invalid_argument("mahler_quadrature: zero polynomial");
  if (grid_size < 1) throw std::invalid_argument("mahler_quadrature: grid_size must be positive");
  const std::vector<std::size_t> active = q.active_variables();
  QuadratureResult out;
  if (active.empty()) {
    out.nodes = 1;
    out.value = log_big(abs(q.constant_term()));
    return out;
  }

  std::uint64_t nodes = 1;
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (nodes > kMaxNodes / grid_size) throw std::invalid_argument("mahler_quadrature: grid too large");
    nodes *= grid_size;
  }

  // Node i sits at (i + 1/2) / G, so exp(-2 pi i k t) = w^(k (2i + 1)) with w
  // a primitive 2G-th root of unity.
  const std::int64_t period = 2 * static_cast<std::int64_t>(grid_size);
  std::vector<std::complex<double>> table(period);
  for (std::int64_t j = 0; j < period; ++j) {
    const double angle = -std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_size);
    table[j] = {std::cos(angle), std::sin(angle)};
  }

  struct Term {
    std::vector<std::int64_t> k;  // frequency restricted to active variables, reduced mod 2G
    double coefficient;
  };
  std::vector<Term> terms;
  for (const auto& [freq, coeff] : q.terms()) {
    Term t{{}, static_cast<double>(coeff)};
    for (std::size_t v : active) t.k.push_back(((freq[v] % period) + period) % period);
    terms.push_back(std::move(t));
  }

  std::vector<std::size_t> index(active.size(), 0);
  long double total = 0;
  for (std::uint64_t n = 0; n < nodes; ++n) {
    std::complex<double> value = 0;
    for (const Term& t : terms) {
      std::int64_t phase = 0;
      for (std::size_t v = 0; v < active.size(); ++v)
        phase = (phase + t.k[v] * static_cast<std::int64_t>(2 * index[v] + 1)) % period;
      value += t.coefficient * table[phase];
    }
    const double modulus = std::abs(value);
    if (modulus < kSingularThreshold)
      ++out.singular_nodes;
    else
      total += std::log(modulus);
    for (std::size_t v = 0; v < active.size(); ++v) {
      if (++index[v] < grid_size) break;
      index[v] = 0;
    }
  }
  out.nodes = nodes;
  if (out.singular_nodes == nodes) throw NumericalError("mahler_quadrature: every node is singular");
  out.value = static_cast<double>(total / static_cast<long double>(nodes - out.singular_nodes));
  return out;
}

TrigPoly to_trig_poly(const IntPolynomial& p) {
  TrigPoly out(1);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    if (p.coefficients()[i] != 0) out.add_term({static_cast<std::int64_t>(i)}, p.coefficients()[i]);
  return out;
}

}  // namespace subcocycle

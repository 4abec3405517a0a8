#include "subcocycle/number_theory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "subcocycle/error.hpp"
#include "subcocycle/roots.hpp"

namespace subcocycle {

namespace {

using cld = std::complex<long double>;
constexpr int kIrreducibilityDegreeGuard = 12;
constexpr long double kRoundingThreshold = 0.3L;

// Largest-modulus eigenvalue, ties broken toward the positive real axis.
std::size_t dominant_index(const std::vector<std::complex<double>>& z) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < z.size(); ++i) {
    const double a = std::abs(z[i]), b = std::abs(z[best]);
    if (a > b * (1 + 1e-12) || (std::abs(a - b) <= 1e-12 * b && z[i].real() > z[best].real())) best = i;
  }
  return best;
}

}  // namespace

bool is_irreducible_over_q(const IntPolynomial& p) {
  if (p.degree() > kIrreducibilityDegreeGuard)
    throw std::domain_error("is_irreducible_over_q: degree exceeds the guard of 12");
  const IntPolynomial f = p.primitive_part();
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  if (gcd(f, f.derivative()).degree() > 0) return false;

  const RootSet rs = roots(f);
  std::vector<cld> z;
  std::vector<long double> err;
  for (const auto& r : rs.roots) {
    z.emplace_back(r.value.real(), r.value.imag());
    err.push_back(r.error_bound);
  }
  const long double lead = static_cast<long double>(f.leading());

  const unsigned full = (1U << n) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    const int size = std::popcount(mask);
    if (size > n / 2) continue;
    // lead * prod (x - z_i), with coefficient bounds from the root errors.
    std::vector<cld> prod{cld(1)};
    std::vector<long double> upper{1}, lower{1};
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1U << i))) continue;
      const long double m = std::abs(z[i]);
      std::vector<cld> np(prod.size() + 1, cld(0));
      std::vector<long double> nu(upper.size() + 1, 0), nl(lower.size() + 1, 0);
      for (std::size_t k = 0; k < prod.size(); ++k) {
        np[k + 1] += prod[k];
        np[k] -= z[i] * prod[k];
        nu[k + 1] += upper[k];
        nu[k] += (m + err[i]) * upper[k];
        nl[k + 1] += lower[k];
        nl[k] += m * lower[k];
      }
      prod.swap(np);
      upper.swap(nu);
      lower.swap(nl);
    }
    bool certainly_not = false;
    bool precise = true;
    std::vector<BigInt> candidate(prod.size());
    for (std::size_t k = 0; k < prod.size(); ++k) {
      const cld value = lead * prod[k];
      const long double bound = std::abs(lead) * (upper[k] - lower[k]) +
                                std::abs(lead) * upper[k] * 64 * std::numeric_limits<long double>::epsilon();
      const long double nearest = std::round(value.real());
      const long double distance = std::abs(value - cld(nearest, 0));
      if (distance > bound && distance > 1e-12L * std::max<long double>(1, std::abs(value))) {
        certainly_not = true;
        break;
      }
      if (bound >= kRoundingThreshold || distance >= kRoundingThreshold) precise = false;
      candidate[k] = BigInt(static_cast<long long>(nearest));
      if (std::abs(nearest) > 9e18L) precise = false;
    }
    if (certainly_not) continue;
    if (!precise)
      throw UndecidedError("is_irreducible_over_q: root precision insufficient to certify a factor candidate");
    const IntPolynomial g = IntPolynomial(std::move(candidate)).primitive_part();
    if (g.degree() >= 1 && g.degree() < n && exact_quotient(f, g)) return false;
  }
  return true;
}

bool dominance_condition(const IntMatrix& a, unsigned n) {
  const auto z = roots(char_poly(a)).expanded();
  const std::size_t top = dominant_index(z);
  const std::complex<long double> lead = std::pow(cld(z[top].real(), z[top].imag()), static_cast<int>(n));
  const long double scale = std::max<long double>(1, std::abs(lead));
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j == top) continue;
    const cld other = std::pow(cld(z[j].real(), z[j].imag()), static_cast<int>(n));
    if (std::abs(lead - other) <= 1e-9L * scale) return false;
  }
  return true;
}

bool power_irreducible(const IntMatrix& a, unsigned n) {
  if (n == 0) throw std::invalid_argument("power_irreducible: n must be at least 1");
  if (!dominance_condition(a, n)) return false;
  return is_irreducible_over_q(char_poly(a.pow(n)));
}

const char* to_string(NumberKind kind) {
  switch (kind) {
    case NumberKind::pisot:
      return "Pisot";
    case NumberKind::salem:
      return "Salem";
    case NumberKind::neither:
      return "neither";
  }
  return "neither";
}

IntPolynomial reciprocal_reduce(const IntPolynomial& p) {
  if (p.degree() != 4 || !p.is_monic() || !p.is_palindromic())
    throw std::invalid_argument("reciprocal_reduce: expected a monic palindromic quartic");
  const BigInt a = p.coefficient(3), b = p.coefficient(2);
  return IntPolynomial(std::vector<BigInt>{b - 2, a, 1});
}

IntPolynomial reciprocal_reduce_shifted(const IntPolynomial& p) {
  const IntPolynomial q = reciprocal_reduce(p);
  const BigInt a = q.coefficient(1), c = q.coefficient(0);
  // (w + 2)^2 + a (w + 2) + c
  return IntPolynomial(std::vector<BigInt>{4 + 2 * a + c, a + 4, 1});
}

NumberClass classify_number(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("classify_number: polynomial must be monic");
  if (!is_irreducible_over_q(p)) throw std::invalid_argument("classify_number: polynomial must be irreducible");
  NumberClass out;
  if (p.degree() == 1) {
    out.value = static_cast<double>(-p.coefficient(0));
    out.kind = out.value > 1 ? NumberKind::pisot : NumberKind::neither;
    return out;
  }
  const auto z = roots(p).expanded();
  std::size_t top = z.size();
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (std::abs(z[i].imag()) > 1e-12 * (1 + std::abs(z[i]))) continue;
    if (top == z.size() || z[i].real() > z[top].real()) top = i;
  }
  if (top == z.size()) return out;  // no real root
  out.value = z[top].real();
  for (std::size_t i = 0; i < z.size(); ++i)
    if (i != top) out.conjugate_moduli.push_back(std::abs(z[i]));
  if (out.value <= 1) return out;

  constexpr double tol = 1e-8;
  const bool inside = std::all_of(out.conjugate_moduli.begin(), out.conjugate_moduli.end(),
                                  [](double m) { return m < 1 - tol; });
  const bool closed = std::all_of(out.conjugate_moduli.begin(), out.conjugate_moduli.end(),
                                  [](double m) { return m <= 1 + tol; });
  const bool touches = std::any_of(out.conjugate_moduli.begin(), out.conjugate_moduli.end(),
                                   [](double m) { return std::abs(m - 1) <= tol; });
  if (inside)
    out.kind = NumberKind::pisot;
  else if (closed && touches)
    out.kind = NumberKind::salem;

  if (p.degree() == 4 && p.is_palindromic()) {
    // Roots lambda pair up with 1/lambda; w = lambda + 1/lambda - 2 lies in
    // (-4, 0) exactly for lambda on the unit circle and is positive for real
    // lambda > 0. Salem iff the shifted quadratic has one root of each kind.
    const IntPolynomial w = reciprocal_reduce_shifted(p);
    const BigInt at_zero = w.evaluate(BigInt(0));
    const BigInt at_minus_four = w.evaluate(BigInt(-4));
    out.kind = (at_zero < 0 && at_minus_four > 0) ? NumberKind::salem : NumberKind::neither;
    out.exact = true;
  }
  return out;
}

}  // namespace subcocycle

#include "subcocycle/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "subcocycle/substitution.hpp"

namespace subcocycle {

namespace {

using cld = std::complex<long double>;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

std::vector<long double> to_long_double(const IntPolynomial& p) {
  std::vector<long double> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.push_back(static_cast<long double>(v));
  return c;
}

struct Evaluation {
  cld value;
  cld derivative;
  long double rounding;  // bound on the rounding error of `value`
};

Evaluation horner(const std::vector<long double>& c, cld z) {
  cld p = 0, dp = 0;
  long double magnitude = 0;
  const long double az = std::abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
    magnitude = magnitude * az + std::abs(c[i]);
  }
  return {p, dp, 4 * static_cast<long double>(c.size()) * kEps * magnitude};
}

void newton_polish(const std::vector<long double>& c, cld& z) {
  for (int iter = 0; iter < 100; ++iter) {
    const Evaluation e = horner(c, z);
    if (e.derivative == cld(0)) return;
    const cld step = e.value / e.derivative;
    z -= step;
    if (std::abs(step) <= 4 * kEps * std::max<long double>(1, std::abs(z))) return;
  }
}

void aberth(const std::vector<long double>& c, std::vector<cld>& z) {
  const std::size_t n = z.size();
  for (int iter = 0; iter < 500; ++iter) {
    long double largest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Evaluation e = horner(c, z[i]);
      if (e.derivative == cld(0)) continue;
      const cld ratio = e.value / e.derivative;
      cld repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && z[i] != z[j]) repulsion += cld(1) / (z[i] - z[j]);
      const cld step = ratio / (cld(1) - ratio * repulsion);
      z[i] -= step;
      largest = std::max(largest, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
    }
    if (largest < 16 * kEps) return;
  }
}

bool has_collision(const std::vector<cld>& z) {
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (std::abs(z[i] - z[j]) <= 1e-10L * std::max<long double>(1, std::abs(z[i]))) return true;
  return false;
}

// Roots of a squarefree integer polynomial of degree >= 1.
std::vector<cld> simple_roots(const IntPolynomial& f) {
  const auto c = to_long_double(f);
  const int n = f.degree();
  if (n == 1) return {cld(-c[0] / c[1])};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = static_cast<double>(-c[i] / c[n]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("roots: eigenvalue iteration failed");
  std::vector<cld> starts;
  for (int i = 0; i < n; ++i) {
    const auto ev = solver.eigenvalues()(i);
    starts.emplace_back(ev.real(), ev.imag());
  }
  std::vector<cld> z = starts;
  for (auto& r : z) newton_polish(c, r);
  if (has_collision(z)) {
    z = starts;
    aberth(c, z);
    for (auto& r : z) newton_polish(c, r);
  }
  return z;
}

}  // namespace

std::size_t RootSet::count() const {
  std::size_t n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::vector<std::complex<double>> RootSet::expanded() const {
  std::vector<std::complex<double>> out;
  for (const auto& r : roots)
    for (unsigned i = 0; i < r.multiplicity; ++i) out.push_back(r.value);
  return out;
}

double RootSet::total_residual() const {
  double s = 0;
  for (const auto& r : roots) s += r.residual_bound;
  return s;
}

RootSet roots(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::domain_error("roots: polynomial must have degree >= 1");
  const auto full = to_long_double(p);
  RootSet out;
  for (const auto& [factor, multiplicity] : square_free_decomposition(p)) {
    const auto c = to_long_double(factor);
    for (const cld& z : simple_roots(factor)) {
      const Evaluation local = horner(c, z);
      const long double deriv = std::abs(local.derivative);
      Root r;
      r.value = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
      r.multiplicity = multiplicity;
      const long double step =
          deriv > 0 ? (std::abs(local.value) + local.rounding) / deriv : std::numeric_limits<long double>::infinity();
      r.error_bound = static_cast<double>(2 * step + 2e-16L * std::max<long double>(1, std::abs(z)));
      const Evaluation at_value = horner(full, cld(r.value.real(), r.value.imag()));
      r.residual_bound = static_cast<double>(std::abs(at_value.value) + at_value.rounding);
      out.roots.push_back(r);
    }
  }
  return out;
}

PerronData perron_data(const IntMatrix& a) {
  const std::size_t d = a.dimension();
  if (d == 0) throw std::domain_error("perron_data: empty matrix");
  if (!a.is_nonnegative() || !is_primitive(a))
    throw std::domain_error("perron_data: matrix is not primitive, no simple dominant eigenvalue");

  std::vector<long double> m(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i * d + j] = static_cast<long double>(a(i, j));

  std::vector<long double> v(d, 1.0L / d), w(d);
  long double theta = 0;
  for (int iter = 0; iter < 1000000; ++iter) {
    long double sum = 0;
    for (std::size_t i = 0; i < d; ++i) {
      long double acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += m[i * d + j] * v[j];
      w[i] = acc;
      sum += acc;
    }
    long double change = 0;
    for (std::size_t i = 0; i < d; ++i) {
      w[i] /= sum;
      change = std::max(change, std::abs(w[i] - v[i]));
    }
    v.swap(w);
    theta = sum;  // v had unit sum, so sum(Av) is the Rayleigh-type ratio
    if (change < 64 * kEps) break;
  }

  // Newton on the exact characteristic polynomial sharpens the eigenvalue.
  const auto c = to_long_double(char_poly(a));
  cld z(theta, 0);
  newton_polish(c, z);
  if (std::abs(z.imag()) == 0 && std::abs(z.real() - theta) < 1e-6L * theta) theta = z.real();

  PerronData out;
  out.eigenvalue = static_cast<double>(theta);
  out.eigenvector.resize(d);
  for (std::size_t i = 0; i < d; ++i) out.eigenvector[i] = static_cast<double>(v[i]);
  return out;
}

}  // namespace subcocycle

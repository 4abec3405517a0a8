#include "subcocycle/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "subcocycle/error.hpp"
#include "subcocycle/polynomial.hpp"
#include "subcocycle/roots.hpp"

namespace subcocycle {

namespace {

using u128 = unsigned __int128;
constexpr std::uint64_t kModulus = TorusPoint::kOrbitModulus;
constexpr double kLogUnderflow = -690.7755278982137;  // log(1e-300)
constexpr unsigned kMaxRedraws = 64;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return splitmix(splitmix(splitmix(splitmix(seed) ^ a) ^ b) ^ c);
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// Kronecker lattice with the generalized golden ratio: phi is the positive
// root of x^(d+1) = x + 1 and the step in coordinate j is phi^-(j+1).
std::vector<std::uint64_t> lattice_steps(std::size_t d) {
  long double phi = 2;
  for (int it = 0; it < 100; ++it) {
    const long double f = std::pow(phi, static_cast<long double>(d + 1)) - phi - 1;
    const long double df = (d + 1) * std::pow(phi, static_cast<long double>(d)) - 1;
    phi -= f / df;
  }
  std::vector<std::uint64_t> steps(d);
  long double alpha = 1;
  for (std::size_t j = 0; j < d; ++j) {
    alpha /= phi;
    const long double frac = alpha - std::floor(alpha);
    steps[j] = static_cast<std::uint64_t>(std::llroundl(frac * static_cast<long double>(kModulus))) % kModulus;
  }
  return steps;
}

class PointSource {
 public:
  PointSource(std::size_t dim, std::uint64_t seed, Sampler sampler)
      : dim_(dim), seed_(seed), sampler_(sampler), steps_(lattice_steps(dim)), shift_(dim) {
    for (std::size_t j = 0; j < dim; ++j) shift_[j] = mix(seed, 0x5348494654ULL, j, 0) % kModulus;
  }

  TorusPoint draw(std::uint64_t index, unsigned attempt) const {
    std::vector<std::uint64_t> r(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sampler_ == Sampler::lattice && attempt == 0) {
        const u128 v = static_cast<u128>(index + 1) * steps_[j] + shift_[j];
        r[j] = static_cast<std::uint64_t>(v % kModulus);
      } else {
        r[j] = mix(seed_, index, j, attempt) % kModulus;
      }
    }
    return TorusPoint::from_residues(std::move(r), kModulus);
  }

 private:
  std::size_t dim_;
  std::uint64_t seed_;
  Sampler sampler_;
  std::vector<std::uint64_t> steps_;
  std::vector<std::uint64_t> shift_;
};

std::string describe(const TorusPoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t j = 0; j < p.dimension(); ++j) os << (j ? ", " : "") << p.coordinate(j);
  os << ')';
  return os.str();
}

// log ||M(xi, k)|| without forming the unscaled product; -inf when the
// product vanishes.
double log_norm_product(const SpectralCocycle& cocycle, const TorusPoint& start, unsigned k, MatrixNorm norm) {
  ComplexMatrix unit, factor;
  double log_scale = 0;
  TorusPoint x = start;
  for (unsigned i = 0; i < k; ++i) {
    if (i) x = cocycle.step(x);
    cocycle.evaluate_into(x, factor);
    if (i == 0)
      unit = factor;
    else
      unit = factor * unit;
    const double scale = unit.norm();
    if (!std::isfinite(scale))
      throw NumericalError("cocycle evaluation is not finite at xi = " + describe(start));
    if (scale == 0.0) return -std::numeric_limits<double>::infinity();
    unit /= scale;
    log_scale += std::log(scale);
  }
  const double n = matrix_norm(unit, norm);
  if (n == 0.0) return -std::numeric_limits<double>::infinity();
  return log_scale + std::log(n);
}

double regularize(double log_norm, double epsilon) {
  if (!(epsilon > 0)) return log_norm;
  const double log_eps = std::log(epsilon);
  if (log_norm == -std::numeric_limits<double>::infinity()) return log_eps;
  if (log_norm >= log_eps) return log_norm + std::log1p(std::exp(log_eps - log_norm));
  return log_eps + std::log1p(std::exp(log_norm - log_eps));
}

unsigned resolve_threads(unsigned requested) {
  if (requested == 0) requested = std::max(1U, std::thread::hardware_concurrency());
  return requested;
}

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::mc_integral:
      return "mc_integral";
    case Method::birkhoff:
      return "birkhoff";
    case Method::entrywise_bound:
      return "entrywise_bound";
    case Method::analytic_bound:
      return "analytic_bound";
  }
  return "mc_integral";
}

const char* to_string(Sampler sampler) { return sampler == Sampler::lattice ? "lattice" : "pseudorandom"; }

LyapunovEstimate mc_exponent(const Substitution& sub, unsigned k, std::uint64_t samples, std::uint64_t seed,
                             const McOptions& options) {
  if (k == 0) throw std::invalid_argument("mc_exponent: k must be at least 1");
  if (k > kMaxPower) throw std::invalid_argument("mc_exponent: k exceeds the guard of " + std::to_string(kMaxPower));
  if (samples < 100) throw std::invalid_argument("mc_exponent: at least 100 samples are required");

  const SpectralCocycle cocycle(sub);
  const PointSource source(sub.alphabet_size(), seed, options.sampler);
  std::vector<double> logs(samples);
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), samples));
  std::vector<std::uint64_t> rejected(threads, 0);
  std::vector<std::exception_ptr> failures(threads);

  auto work = [&](unsigned worker) {
    try {
      const std::uint64_t begin = samples * worker / threads, end = samples * (worker + 1) / threads;
      for (std::uint64_t i = begin; i < end; ++i) {
        double value = 0;
        unsigned attempt = 0;
        for (;; ++attempt) {
          const TorusPoint xi = source.draw(i, attempt);
          value = log_norm_product(cocycle, xi, k, options.norm);
          if (value >= kLogUnderflow) break;
          if (attempt == kMaxRedraws)
            throw NumericalError("mc_exponent: norm underflows at every redraw for sample " + std::to_string(i));
        }
        rejected[worker] += attempt;
        logs[i] = regularize(value, options.epsilon);
      }
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  const double n = static_cast<double>(samples);
  const double mean = pairwise_sum(logs) / n;
  for (double& x : logs) x = (x - mean) * (x - mean);
  const double variance = pairwise_sum(logs) / (n - 1);

  LyapunovEstimate out;
  out.method = Method::mc_integral;
  out.k = k;
  out.samples = samples;
  out.seed = seed;
  out.sampler = options.sampler;
  out.value = mean / k;
  out.std_error = std::sqrt(variance / n) / k;
  for (auto r : rejected) out.rejected += r;
  out.flagged = out.rejected * 1000 > samples;
  return out;
}

LyapunovEstimate entrywise_bound(const Substitution& sub, unsigned k) {
  if (k == 0) throw std::invalid_argument("entrywise_bound: k must be at least 1");
  LyapunovEstimate out;
  out.method = Method::entrywise_bound;
  out.k = k;
  out.value = log_big(substitution_matrix(sub).pow(k).entry_sum()) / (2.0 * k);
  return out;
}

double half_log_theta(const Substitution& sub) {
  const IntMatrix s = substitution_matrix(sub);
  if (is_primitive(s)) return 0.5 * std::log(perron_data(s).eigenvalue);
  double radius = 0;
  for (const auto& z : roots(char_poly(s)).expanded()) radius = std::max(radius, std::abs(z));
  return 0.5 * std::log(radius);
}

namespace {

void finish(ExponentReport& report) {
  report.best = std::numeric_limits<double>::infinity();
  for (const auto& e : report.table) {
    const double adjusted = e.method == Method::mc_integral ? e.value + 3 * e.std_error : e.value;
    if (adjusted < report.best) {
      report.best = adjusted;
      report.best_std_error = e.std_error;
      report.best_method = e.method;
    }
  }
  report.margin = report.half_log_theta - report.best;
}

}  // namespace

ExponentReport inf_exponent(const Substitution& sub, unsigned k_max, std::uint64_t samples, std::uint64_t seed,
                            const McOptions& options,
                            const std::function<void(const LyapunovEstimate&)>& progress) {
  if (k_max == 0) throw std::invalid_argument("inf_exponent: k_max must be at least 1");
  ExponentReport report;
  report.half_log_theta = half_log_theta(sub);
  for (unsigned k = 1; k <= k_max; ++k) {
    if (k > kMaxPower) {
      report.skipped_k.push_back(k);
    } else {
      report.table.push_back(mc_exponent(sub, k, samples, seed, options));
      if (progress) progress(report.table.back());
    }
    report.table.push_back(entrywise_bound(sub, k));
  }
  finish(report);
  return report;
}

ExponentReport entrywise_report(const Substitution& sub, unsigned k) {
  ExponentReport report;
  report.half_log_theta = half_log_theta(sub);
  report.table.push_back(entrywise_bound(sub, k));
  finish(report);
  return report;
}

TorusPoint diagonal_point(std::size_t dim, double omega) {
  const std::vector<double> coords(dim, omega);
  return TorusPoint::lift(coords);
}

LyapunovEstimate pointwise_exponent(const Substitution& sub, std::span<const double> direction, double omega,
                                    unsigned n_steps) {
  if (direction.size() != sub.alphabet_size())
    throw std::invalid_argument("pointwise_exponent: direction has the wrong dimension");
  std::vector<double> coords;
  for (double s : direction) {
    if (!(s > 0)) throw std::invalid_argument("pointwise_exponent: direction must be strictly positive");
    coords.push_back(omega * s);
  }
  return pointwise_exponent(sub, TorusPoint::lift(coords), n_steps);
}

LyapunovEstimate pointwise_exponent(const Substitution& sub, const TorusPoint& start, unsigned n_steps) {
  if (n_steps < 10) throw std::invalid_argument("pointwise_exponent: N must be at least 10");
  if (start.dimension() != sub.alphabet_size())
    throw std::invalid_argument("pointwise_exponent: point has the wrong dimension");
  const SpectralCocycle cocycle(sub);
  const double log_norm = log_norm_product(cocycle, start, n_steps, MatrixNorm::frobenius);
  if (!std::isfinite(log_norm)) throw NumericalError("pointwise_exponent: the cocycle product vanished");
  LyapunovEstimate out;
  out.method = Method::birkhoff;
  out.value = log_norm / n_steps;
  out.samples = n_steps;
  return out;
}

std::vector<WeylSum> weyl_diagnostic(const Substitution& sub, double omega, std::uint64_t n_points,
                                     unsigned max_freq) {
  return weyl_diagnostic(sub, diagonal_point(sub.alphabet_size(), omega), n_points, max_freq);
}

std::vector<WeylSum> weyl_diagnostic(const Substitution& sub, const TorusPoint& start, std::uint64_t n_points,
                                     unsigned max_freq) {
  const IntMatrix s = substitution_matrix(sub);
  if (s.determinant() == 0) throw std::invalid_argument("weyl_diagnostic: substitution matrix is singular");
  if (n_points == 0) throw std::invalid_argument("weyl_diagnostic: N must be positive");
  const std::size_t d = s.dimension();
  if (start.dimension() != d) throw std::invalid_argument("weyl_diagnostic: point has the wrong dimension");

  std::vector<std::vector<std::int64_t>> freqs;
  std::vector<std::int64_t> k(d, -static_cast<std::int64_t>(max_freq));
  for (;;) {
    if (std::any_of(k.begin(), k.end(), [](std::int64_t v) { return v != 0; })) freqs.push_back(k);
    std::size_t j = 0;
    while (j < d && k[j] == static_cast<std::int64_t>(max_freq)) k[j++] = -static_cast<std::int64_t>(max_freq);
    if (j == d) break;
    ++k[j];
  }

  const ToralEndomorphism endo(s.transpose());
  std::vector<long double> re(freqs.size(), 0), im(freqs.size(), 0);
  TorusPoint x = start;
  for (std::uint64_t n = 0; n < n_points; ++n) {
    if (n) x = endo(x);
    for (std::size_t f = 0; f < freqs.size(); ++f) {
      const double angle = 2 * std::numbers::pi * x.phase(freqs[f]);
      re[f] += std::cos(angle);
      im[f] += std::sin(angle);
    }
  }
  std::vector<WeylSum> out;
  const long double n = static_cast<long double>(n_points);
  for (std::size_t f = 0; f < freqs.size(); ++f)
    out.push_back({freqs[f], static_cast<double>(std::hypot(re[f] / n, im[f] / n))});
  return out;
}

}  // namespace subcocycle

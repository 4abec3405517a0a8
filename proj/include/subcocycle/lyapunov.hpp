#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "subcocycle/cocycle.hpp"
#include "subcocycle/substitution.hpp"
#include "subcocycle/torus.hpp"

namespace subcocycle {

enum class Method { mc_integral, birkhoff, entrywise_bound, analytic_bound };
enum class Sampler { lattice, pseudorandom };

const char* to_string(Method method);
const char* to_string(Sampler sampler);

/// One estimate of a Lyapunov-type quantity, in nats.
struct LyapunovEstimate {
  double value = 0.0;
  double std_error = 0.0;
  Method method = Method::mc_integral;
  unsigned k = 1;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Sampler sampler = Sampler::lattice;
  std::uint64_t rejected = 0;  // samples redrawn because the norm underflowed
  bool flagged = false;        // more than 0.1% of samples were redrawn
};

struct McOptions {
  Sampler sampler = Sampler::lattice;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
  /// Averages log(epsilon + ||.||) instead of log ||.|| when positive.
  double epsilon = 0.0;
  MatrixNorm norm = MatrixNorm::frobenius;
};

/// Largest power of the substitution accepted by mc_exponent.
inline constexpr unsigned kMaxPower = 4096;

/// (1/k) times the mean of log ||M_{zeta^k}(xi)|| over `samples` torus points.
///
/// M_{zeta^k}(xi) is evaluated as the cocycle product along the exact orbit
/// of xi, so the power substitution is never expanded. Each sample depends
/// only on (seed, index), and the mean is a fixed-order pairwise sum, which
/// makes the result independent of the thread count.
LyapunovEstimate mc_exponent(const Substitution& sub, unsigned k, std::uint64_t samples, std::uint64_t seed,
                             const McOptions& options = {});

/// (1/2k) log of the entry sum of S^k, computed exactly.
LyapunovEstimate entrywise_bound(const Substitution& sub, unsigned k);

struct ExponentReport {
  std::vector<LyapunovEstimate> table;
  double best = 0.0;  // min over mc (value + 3 std_error) and entrywise values
  double best_std_error = 0.0;
  Method best_method = Method::mc_integral;
  double half_log_theta = 0.0;
  double margin = 0.0;  // half_log_theta - best
  std::vector<unsigned> skipped_k;
};

/// log of the Perron eigenvalue over two (spectral radius when not primitive).
double half_log_theta(const Substitution& sub);

/// Runs mc_exponent and entrywise_bound for k = 1..k_max.
ExponentReport inf_exponent(const Substitution& sub, unsigned k_max, std::uint64_t samples, std::uint64_t seed,
                            const McOptions& options = {},
                            const std::function<void(const LyapunovEstimate&)>& progress = {});

/// Report carrying only the exact entrywise bound at one k.
ExponentReport entrywise_report(const Substitution& sub, unsigned k);

/// (1/N) log ||M(xi, N)|| at xi = omega * direction (mod 1), via the rescaled product.
LyapunovEstimate pointwise_exponent(const Substitution& sub, std::span<const double> direction, double omega,
                                    unsigned n_steps);
LyapunovEstimate pointwise_exponent(const Substitution& sub, const TorusPoint& start, unsigned n_steps);

struct WeylSum {
  std::vector<std::int64_t> frequency;
  double modulus = 0.0;
};

/// |1/N sum_{n<N} exp(2 pi i <k, E^n xi_0>)| for every nonzero k with
/// ||k||_inf <= max_freq, starting from xi_0 = omega * (1, ..., 1).
std::vector<WeylSum> weyl_diagnostic(const Substitution& sub, double omega, std::uint64_t n_points,
                                     unsigned max_freq);
std::vector<WeylSum> weyl_diagnostic(const Substitution& sub, const TorusPoint& start, std::uint64_t n_points,
                                     unsigned max_freq);

/// omega * (1, ..., 1) on the prime-denominator grid used for orbits.
TorusPoint diagonal_point(std::size_t dim, double omega);

}  // namespace subcocycle

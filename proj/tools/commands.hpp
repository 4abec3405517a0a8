#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subcocycle/serialize.hpp"

namespace subcocycle::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kConfigError = 2,
  kHypothesesViolated = 3,
  kInconclusive = 4,
};

struct RunConfig {
  std::string command;
  std::string substitution;
  std::string file;
  std::uint64_t seed = 1;
  std::uint64_t samples = 50000;
  unsigned k_max = 4;
  std::uint64_t n_steps = 100000;
  std::string format = "json";
  std::string output;
  unsigned threads = 0;
  bool timing = true;
  bool quiet = false;

  std::string method = "mc";
  unsigned k = 0;
  std::string sampler = "lattice";
  double epsilon = 0.0;
  std::string norm = "frobenius";
  bool dump_cocycle = false;
  bool pointwise = false;
  bool weyl = false;
  std::string omega = "0";
  std::string direction;
  unsigned max_freq = 2;

  unsigned theorem = 1;
  bool assert_aperiodic = false;
  std::string bound;
  std::optional<double> bound_value;

  std::string loop;
  std::optional<unsigned> family;
  std::string component;
  unsigned depth = 3;

  std::string polynomial;
  bool quadrature = false;
  std::size_t grid = 65536;
  std::string log_base = "e";
};

struct CommandOutput {
  json result;
  std::string text;  // rendering for --format table / csv
  int exit_code = kSuccess;
};

CommandOutput cmd_analyze(const RunConfig& config);
CommandOutput cmd_lyapunov(const RunConfig& config);
CommandOutput cmd_verdict(const RunConfig& config);
CommandOutput cmd_rauzy(const RunConfig& config);
CommandOutput cmd_mahler(const RunConfig& config);
CommandOutput cmd_polynomial(const RunConfig& config);

/// The options that determine a result; threads and output path are left out.
json config_echo(const RunConfig& config);

}  // namespace subcocycle::cli

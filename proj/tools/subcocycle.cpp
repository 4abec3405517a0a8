#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "subcocycle/error.hpp"

using namespace subcocycle;
using namespace subcocycle::cli;

namespace {

void add_substitution(CLI::App* app, RunConfig& c) {
  app->add_option("-s,--substitution", c.substitution, "Substitution such as \"0->01;1->0\"");
  app->add_option("-f,--file", c.file, "File holding a substitution ('#' starts a comment)");
}

void add_output(CLI::App* app, RunConfig& c, bool csv) {
  app->add_option("--format", c.format, "Output format")
      ->check(csv ? CLI::IsMember({"json", "csv", "table"}) : CLI::IsMember({"json", "table"}));
  app->add_option("-o,--output", c.output, "Write the report here instead of stdout");
  app->add_flag("--timing,!--no-timing", c.timing, "Leave the wall-clock time out of the report");
}

void add_sampling(CLI::App* app, RunConfig& c) {
  app->add_option("--seed", c.seed, "Sampler seed");
  app->add_option("--samples", c.samples, "Monte-Carlo samples per k");
  app->add_option("--k-max", c.k_max, "Largest power of the substitution")->check(CLI::PositiveNumber);
  app->add_option("--k", c.k, "Single power to evaluate");
  app->add_option("--method", c.method, "mc or entrywise")->check(CLI::IsMember({"mc", "entrywise"}));
  app->add_option("--sampler", c.sampler, "lattice or pseudorandom")
      ->check(CLI::IsMember({"lattice", "pseudorandom"}));
  app->add_option("--norm", c.norm, "frobenius or operator2")->check(CLI::IsMember({"frobenius", "operator2"}));
  app->add_option("--epsilon", c.epsilon, "Average log(epsilon + ||M||) instead of log ||M||");
  app->add_option("--threads", c.threads, "Worker threads (0: all cores); SUBCOCYCLE_THREADS overrides");
  app->add_flag("-q,--quiet", c.quiet, "No progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral cocycle analysis of substitutions"};
  app.set_version_flag("--version", SUBCOCYCLE_VERSION);
  app.require_subcommand(1);
  RunConfig c;

  auto* analyze = app.add_subcommand("analyze", "Matrix, characteristic polynomial, Perron data, cocycle matrix");
  add_substitution(analyze, c);
  add_output(analyze, c, false);

  auto* lyapunov = app.add_subcommand("lyapunov", "Top Lyapunov exponent estimates of the spectral cocycle");
  add_substitution(lyapunov, c);
  add_output(lyapunov, c, true);
  add_sampling(lyapunov, c);
  lyapunov->add_flag("--dump-cocycle", c.dump_cocycle, "Include the cocycle matrix in the report");
  lyapunov->add_flag("--pointwise", c.pointwise, "Birkhoff average along the orbit of omega * direction");
  lyapunov->add_flag("--weyl", c.weyl, "Weyl sums of the orbit of omega * (1, ..., 1)");
  lyapunov->add_option("--omega", c.omega, "Starting parameter, decimal or p/q");
  lyapunov->add_option("--direction", c.direction, "Comma-separated positive direction (default all ones)");
  lyapunov->add_option("--N", c.n_steps, "Orbit length for --pointwise and --weyl");
  lyapunov->add_option("--max-freq", c.max_freq, "Largest |k_j| in the Weyl table");

  auto* verdict = app.add_subcommand("verdict", "Decide pure singular spectrum from the exponent criterion");
  add_substitution(verdict, c);
  add_output(verdict, c, false);
  add_sampling(verdict, c);
  verdict->add_option("--theorem", c.theorem, "1 (general) or 2 (two letters, integer eigenvalues)")
      ->check(CLI::IsMember({1, 2}));
  verdict->add_flag("--assert-aperiodic", c.assert_aperiodic, "Take aperiodicity as given");
  verdict->add_option("--bound", c.bound, "Named analytic bound (example51)");
  verdict->add_option("--bound-value", c.bound_value, "Analytic upper bound on the exponent");

  auto* rauzy = app.add_subcommand("rauzy", "Rauzy loops and diagrams");
  add_output(rauzy, c, false);
  rauzy->add_option("--loop", c.loop, "Loop such as \"base=4321 moves=b,a,a,b,a*n,b,a,a,a n=3\"");
  rauzy->add_option("--family", c.family, "Loop of the four-interval family with parameter n");
  rauzy->add_option("--enumerate-component", c.component, "Base permutation of the component to walk");
  rauzy->add_option("--depth", c.depth, "Walk depth for --enumerate-component");

  auto* mahler = app.add_subcommand("mahler", "Logarithmic Mahler measure");
  add_output(mahler, c, false);
  mahler->add_option("-p,--polynomial", c.polynomial, "Coefficients, constant term first")->required();
  mahler->add_flag("--quadrature", c.quadrature, "Cross-check with the trapezoidal rule");
  mahler->add_option("--grid", c.grid, "Quadrature nodes");
  mahler->add_option("--log-base", c.log_base, "e, 2 or 10")->check(CLI::IsMember({"e", "2", "10"}));

  auto* polynomial = app.add_subcommand("polynomial", "Roots, irreducibility and Pisot/Salem class");
  add_output(polynomial, c, false);
  polynomial->add_option("-p,--polynomial", c.polynomial, "Coefficients, constant term first")->required();
  polynomial->add_option("--log-base", c.log_base, "e, 2 or 10")->check(CLI::IsMember({"e", "2", "10"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  if (const char* env = std::getenv("SUBCOCYCLE_THREADS")) {
    try {
      c.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "error: SUBCOCYCLE_THREADS must be a nonnegative integer\n";
      return kConfigError;
    }
  }

  const auto started = std::chrono::steady_clock::now();
  CommandOutput out;
  try {
    if (*analyze) c.command = "analyze", out = cmd_analyze(c);
    else if (*lyapunov) c.command = "lyapunov", out = cmd_lyapunov(c);
    else if (*verdict) c.command = "verdict", out = cmd_verdict(c);
    else if (*rauzy) c.command = "rauzy", out = cmd_rauzy(c);
    else if (*mahler) c.command = "mahler", out = cmd_mahler(c);
    else c.command = "polynomial", out = cmd_polynomial(c);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::string rendered;
  if (c.format == "json") {
    json report = {{"tool", "subcocycle"}, {"version", SUBCOCYCLE_VERSION}, {"config", config_echo(c)}};
    report["result"] = std::move(out.result);
    if (c.timing) report["wall_clock_seconds"] = seconds;
    rendered = report.dump(2) + "\n";
  } else if (c.format == "table") {
    rendered = "subcocycle " SUBCOCYCLE_VERSION " " + c.command + " (seed " + std::to_string(c.seed) + ")\n" + out.text;
  } else {
    rendered = out.text;
  }

  if (c.output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream file(c.output);
    if (!file) {
      std::cerr << "error: cannot write " << c.output << "\n";
      return kConfigError;
    }
    file << rendered;
  }
  return out.exit_code;
}

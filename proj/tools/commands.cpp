#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "subcocycle/cocycle.hpp"
#include "subcocycle/error.hpp"
#include "subcocycle/mahler.hpp"

namespace subcocycle::cli {

namespace {

Substitution load_substitution(const RunConfig& config) {
  if (!config.substitution.empty() && !config.file.empty())
    throw std::invalid_argument("give either --substitution or --file, not both");
  if (!config.file.empty()) {
    std::ifstream in(config.file);
    if (!in) throw std::invalid_argument("cannot read " + config.file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_substitution(buffer.str());
  }
  if (config.substitution.empty()) throw std::invalid_argument("a substitution is required (-s or -f)");
  return parse_substitution(config.substitution);
}

void require_format(const RunConfig& config, bool csv_allowed) {
  if (config.format == "json" || config.format == "table") return;
  if (config.format == "csv" && csv_allowed) return;
  throw std::invalid_argument("format '" + config.format + "' is not available for " + config.command);
}

std::string fmt(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

McOptions mc_options(const RunConfig& config) {
  McOptions o;
  if (config.sampler == "lattice")
    o.sampler = Sampler::lattice;
  else if (config.sampler == "pseudorandom")
    o.sampler = Sampler::pseudorandom;
  else
    throw std::invalid_argument("unknown sampler '" + config.sampler + "'");
  if (config.norm == "frobenius")
    o.norm = MatrixNorm::frobenius;
  else if (config.norm == "operator2")
    o.norm = MatrixNorm::operator2;
  else
    throw std::invalid_argument("unknown norm '" + config.norm + "'");
  o.threads = config.threads;
  o.epsilon = config.epsilon;
  return o;
}

// "0.37" is lifted to the orbit grid; "p/q" stays an exact rational point.
TorusPoint start_point(const RunConfig& config, std::size_t d) {
  const auto slash = config.omega.find('/');
  if (slash == std::string::npos) {
    std::size_t used = 0;
    const double omega = std::stod(config.omega, &used);
    if (used != config.omega.size()) throw std::invalid_argument("invalid --omega '" + config.omega + "'");
    return diagonal_point(d, omega);
  }
  const long long p = std::stoll(config.omega.substr(0, slash));
  const long long q = std::stoll(config.omega.substr(slash + 1));
  if (q <= 0) throw std::invalid_argument("--omega denominator must be positive");
  const std::vector<std::int64_t> numerators(d, p);
  return TorusPoint::from_rational(numerators, static_cast<std::uint64_t>(q));
}

std::vector<double> parse_direction(const std::string& text, std::size_t d) {
  if (text.empty()) return std::vector<double>(d, 1.0);
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.size() != d) throw std::invalid_argument("--direction needs " + std::to_string(d) + " entries");
  return out;
}

std::function<void(const LyapunovEstimate&)> progress_printer(const RunConfig& config) {
  if (config.quiet) return {};
  return [](const LyapunovEstimate& e) {
    std::cerr << "k=" << e.k << " value=" << fmt(e.value, 8) << " std_error=" << fmt(e.std_error, 3) << "\n";
  };
}

}  // namespace

json config_echo(const RunConfig& c) {
  json out = {{"command", c.command}, {"seed", c.seed}};
  if (!c.substitution.empty()) out["substitution"] = c.substitution;
  if (!c.file.empty()) out["file"] = c.file;
  if (c.command == "lyapunov" || c.command == "verdict") {
    out["samples"] = c.samples;
    out["k_max"] = c.k_max;
    out["method"] = c.method;
    out["sampler"] = c.sampler;
    out["norm"] = c.norm;
    if (c.k) out["k"] = c.k;
    if (c.epsilon > 0) out["epsilon"] = c.epsilon;
  }
  if (c.command == "lyapunov" && (c.pointwise || c.weyl)) {
    out["N"] = c.n_steps;
    out["omega"] = c.omega;
    out["pointwise"] = c.pointwise;
    out["weyl"] = c.weyl;
    if (c.weyl) out["max_freq"] = c.max_freq;
    if (!c.direction.empty()) out["direction"] = c.direction;
  }
  if (c.command == "verdict") {
    out["theorem"] = c.theorem;
    out["assert_aperiodic"] = c.assert_aperiodic;
    if (!c.bound.empty()) out["bound"] = c.bound;
    if (c.bound_value) out["bound_value"] = *c.bound_value;
  }
  if (c.command == "rauzy") {
    if (!c.loop.empty()) out["loop"] = c.loop;
    if (c.family) out["family"] = *c.family;
    if (!c.component.empty()) {
      out["enumerate_component"] = c.component;
      out["depth"] = c.depth;
    }
  }
  if (c.command == "mahler" || c.command == "polynomial") {
    out["polynomial"] = c.polynomial;
    if (c.quadrature) out["grid"] = c.grid;
    out["log_base"] = c.log_base;
  }
  out["format"] = c.format;
  return out;
}

CommandOutput cmd_analyze(const RunConfig& config) {
  require_format(config, false);
  const Substitution sub = load_substitution(config);
  const IntMatrix s = substitution_matrix(sub);
  const IntPolynomial p = char_poly(s);
  CommandOutput out;
  json& r = out.result;
  r["substitution"] = serialize(sub);
  r["substitution_matrix"] = serialize(s);
  r["transpose"] = serialize(s.transpose());
  r["determinant"] = serialize(s.determinant());
  r["char_poly"] = serialize(p);
  r["char_poly_text"] = to_string(p);
  r["primitive"] = is_primitive(s);
  r["constant_length"] = is_constant_length(sub);

  std::string irreducible = "undecided";
  try {
    irreducible = is_irreducible_over_q(p) ? "true" : "false";
  } catch (const UndecidedError&) {
  } catch (const std::domain_error&) {
  }
  r["irreducible"] = irreducible;
  if (r["primitive"].get<bool>()) {
    const PerronData pd = perron_data(s);
    r["theta1"] = pd.eigenvalue;
    r["perron_eigenvector"] = pd.eigenvector;
    r["half_log_theta"] = 0.5 * std::log(pd.eigenvalue);
  }
  r["roots"] = serialize(roots(p));
  if (irreducible == "true") r["number_class"] = serialize(classify_number(p));
  const TrigMatrix m = build_cocycle_matrix(sub);
  r["cocycle_matrix"] = serialize(m);

  std::ostringstream os;
  os << "substitution:   " << to_string(sub) << "\n";
  os << "matrix S:       " << to_string(s) << "\n";
  os << "det S:          " << s.determinant() << "\n";
  os << "char poly:      " << to_string(p) << "\n";
  os << "irreducible:    " << irreducible << "\n";
  os << "primitive:      " << (r["primitive"].get<bool>() ? "yes" : "no") << "\n";
  os << "constant length:" << (r["constant_length"].get<bool>() ? " yes" : " no") << "\n";
  if (r.contains("theta1")) os << "theta_1:        " << fmt(r["theta1"].get<double>(), 15) << "\n";
  if (r.contains("number_class")) os << "class:          " << r["number_class"]["kind"].get<std::string>() << "\n";
  os << "cocycle matrix:\n";
  for (std::size_t b = 0; b < m.dimension(); ++b)
    for (std::size_t c = 0; c < m.dimension(); ++c) {
      os << "  M[" << b << "][" << c << "] =";
      if (m(b, c).is_zero()) os << " 0";
      for (const auto& [freq, coeff] : m(b, c).terms()) {
        os << " +" << coeff << "*e(";
        for (std::size_t j = 0; j < freq.size(); ++j) os << (j ? "," : "") << freq[j];
        os << ")";
      }
      os << "\n";
    }
  out.text = os.str();
  return out;
}

CommandOutput cmd_lyapunov(const RunConfig& config) {
  require_format(config, !config.pointwise && !config.weyl);
  const Substitution sub = load_substitution(config);
  CommandOutput out;
  if (config.pointwise || config.weyl) {
    if (config.pointwise && config.weyl) throw std::invalid_argument("--pointwise and --weyl are exclusive");
    const std::size_t d = sub.alphabet_size();
    if (config.pointwise) {
      LyapunovEstimate e;
      if (config.direction.empty()) {
        e = pointwise_exponent(sub, start_point(config, d), static_cast<unsigned>(config.n_steps));
      } else {
        const std::vector<double> direction = parse_direction(config.direction, d);
        e = pointwise_exponent(sub, direction, std::stod(config.omega), static_cast<unsigned>(config.n_steps));
      }
      out.result = {{"pointwise", serialize(e)}, {"half_log_theta", half_log_theta(sub)}};
      out.text = "pointwise exponent at N = " + std::to_string(config.n_steps) + ": " + fmt(e.value) +
                 "\nlog(theta_1)/2: " + fmt(half_log_theta(sub)) + "\n";
    } else {
      const auto sums = weyl_diagnostic(sub, start_point(config, d), config.n_steps, config.max_freq);
      double worst = 0;
      for (const auto& s : sums) worst = std::max(worst, s.modulus);
      out.result = {{"weyl", serialize(sums)}, {"max_modulus", worst}};
      std::ostringstream os;
      for (const auto& s : sums) {
        os << "(";
        for (std::size_t j = 0; j < s.frequency.size(); ++j) os << (j ? "," : "") << s.frequency[j];
        os << ")  " << fmt(s.modulus, 6) << "\n";
      }
      os << "max: " << fmt(worst, 6) << "\n";
      out.text = os.str();
    }
    return out;
  }

  ExponentReport report;
  if (config.method == "entrywise") {
    report = entrywise_report(sub, config.k ? config.k : config.k_max);
  } else if (config.method == "mc") {
    const McOptions options = mc_options(config);
    if (config.k) {
      report.half_log_theta = half_log_theta(sub);
      report.table.push_back(mc_exponent(sub, config.k, config.samples, config.seed, options));
      report.table.push_back(entrywise_bound(sub, config.k));
      const auto& mc = report.table.front();
      const auto& ew = report.table.back();
      const bool mc_wins = mc.value + 3 * mc.std_error < ew.value;
      report.best = mc_wins ? mc.value + 3 * mc.std_error : ew.value;
      report.best_std_error = mc_wins ? mc.std_error : 0.0;
      report.best_method = mc_wins ? Method::mc_integral : Method::entrywise_bound;
      report.margin = report.half_log_theta - report.best;
    } else {
      report = inf_exponent(sub, config.k_max, config.samples, config.seed, options, progress_printer(config));
    }
  } else {
    throw std::invalid_argument("unknown method '" + config.method + "' (expected mc or entrywise)");
  }
  out.result = serialize(report);
  if (config.dump_cocycle) out.result["cocycle_matrix"] = serialize(build_cocycle_matrix(sub));
  out.text = config.format == "csv" ? to_csv(report) : to_table(report);
  return out;
}

CommandOutput cmd_verdict(const RunConfig& config) {
  require_format(config, false);
  const Substitution sub = load_substitution(config);
  Evidence evidence;
  if (!config.bound.empty() && config.bound_value) throw std::invalid_argument("give --bound or --bound-value, not both");
  if (config.bound == "example51") {
    evidence = AnalyticBound{"example51", example51_bound()};
  } else if (!config.bound.empty()) {
    throw std::invalid_argument("unknown bound '" + config.bound + "' (expected example51)");
  } else if (config.bound_value) {
    evidence = AnalyticBound{"user", *config.bound_value};
  } else if (config.method == "entrywise") {
    evidence = entrywise_report(sub, config.k ? config.k : config.k_max);
  } else {
    evidence = inf_exponent(sub, config.k_max, config.samples, config.seed, mc_options(config), progress_printer(config));
  }
  Verdict v;
  if (config.theorem == 1)
    v = check_theorem1(sub, evidence, config.assert_aperiodic);
  else if (config.theorem == 2)
    v = check_theorem2(sub, evidence, config.assert_aperiodic);
  else
    throw std::invalid_argument("--theorem must be 1 or 2");
  CommandOutput out;
  out.result = serialize(v);
  out.text = to_table(v);
  if (v.conclusion == Conclusion::hypotheses_violated) out.exit_code = kHypothesesViolated;
  if (v.conclusion == Conclusion::inconclusive) out.exit_code = kInconclusive;
  return out;
}

CommandOutput cmd_rauzy(const RunConfig& config) {
  require_format(config, false);
  const int modes = !config.loop.empty() + static_cast<int>(config.family.has_value()) + !config.component.empty();
  if (modes != 1) throw std::invalid_argument("rauzy needs exactly one of --loop, --family, --enumerate-component");
  CommandOutput out;
  std::ostringstream os;
  if (!config.component.empty()) {
    const RauzyDiagram diagram = enumerate_component(parse_permutation(config.component), config.depth);
    out.result = serialize(diagram);
    os << "vertices (" << diagram.vertices.size() << "):";
    for (const auto& v : diagram.vertices) os << " (" << to_string(v) << ")";
    os << "\nedges (" << diagram.edges.size() << "):\n";
    for (const auto& e : diagram.edges)
      os << "  (" << to_string(e.from) << ") -" << to_char(e.move) << "-> (" << to_string(e.to) << ")\n";
  } else {
    const RauzyLoop loop = config.family ? family_loop(*config.family) : parse_loop_spec(config.loop);
    const LoopResult result = loop_substitution(loop);
    out.result = serialize(result);
    std::string moves;
    for (RauzyMove m : loop.moves) moves += to_char(m);
    out.result["moves"] = moves;
    os << "path:";
    for (const auto& p : result.path) os << " (" << to_string(p) << ")";
    os << "\nmoves: " << moves << "\n";
    os << "substitution: " << to_string(result.substitution, 1) << "\n";
    os << "matrix: " << to_string(result.matrix) << "\n";
    os << "char poly: " << to_string(char_poly(result.matrix)) << "\n";
  }
  out.text = os.str();
  return out;
}

namespace {

double log_scale(const std::string& base) {
  if (base == "e") return 1.0;
  if (base == "2") return 1.0 / std::log(2.0);
  if (base == "10") return 1.0 / std::log(10.0);
  throw std::invalid_argument("--log-base must be e, 2 or 10");
}

}  // namespace

CommandOutput cmd_mahler(const RunConfig& config) {
  require_format(config, false);
  const IntPolynomial p = parse_coefficients(config.polynomial);
  const double scale = log_scale(config.log_base);
  CommandOutput out;
  const double jensen = mahler_jensen(p);
  out.result = {{"polynomial", serialize(p)}, {"polynomial_text", to_string(p, 'z')}, {"mahler", jensen * scale}};
  std::ostringstream os;
  os << "m(" << to_string(p, 'z') << ") = " << fmt(jensen * scale, 12) << "\n";
  if (config.quadrature) {
    const QuadratureResult q = mahler_quadrature(to_trig_poly(p), config.grid);
    out.result["quadrature"] = {{"value", q.value * scale},
                                {"nodes", q.nodes},
                                {"singular_nodes", q.singular_nodes},
                                {"difference", std::abs(q.value - jensen) * scale}};
    os << "quadrature (" << q.nodes << " nodes): " << fmt(q.value * scale, 12) << "\n";
  }
  out.text = os.str();
  return out;
}

CommandOutput cmd_polynomial(const RunConfig& config) {
  require_format(config, false);
  const IntPolynomial p = parse_coefficients(config.polynomial);
  if (p.degree() < 1) throw std::invalid_argument("polynomial must have degree at least 1");
  CommandOutput out;
  json& r = out.result;
  r["polynomial"] = serialize(p);
  r["polynomial_text"] = to_string(p);
  r["roots"] = serialize(roots(p));
  std::string irreducible = "undecided";
  try {
    irreducible = is_irreducible_over_q(p) ? "true" : "false";
  } catch (const UndecidedError&) {
  } catch (const std::domain_error&) {
  }
  r["irreducible"] = irreducible;
  if (irreducible == "true" && p.is_monic()) r["number_class"] = serialize(classify_number(p));
  if (p.degree() == 4 && p.is_monic() && p.is_palindromic()) {
    r["reciprocal_quadratic"] = serialize(reciprocal_reduce(p));
    r["reciprocal_quadratic_shifted"] = serialize(reciprocal_reduce_shifted(p));
  }
  r["mahler"] = mahler_jensen(p) * log_scale(config.log_base);

  std::ostringstream os;
  os << "p(x) = " << to_string(p) << "\n";
  os << "irreducible: " << irreducible << "\n";
  if (r.contains("number_class")) os << "class: " << r["number_class"]["kind"].get<std::string>() << "\n";
  if (r.contains("reciprocal_quadratic"))
    os << "lambda + 1/lambda solves " << to_string(reciprocal_reduce(p), 'y') << "\n";
  os << "roots:\n";
  for (const Root& root : roots(p).roots)
    os << "  " << fmt(root.value.real(), 12) << (root.value.imag() < 0 ? " - " : " + ")
       << fmt(std::abs(root.value.imag()), 12) << "i  |.| = " << fmt(std::abs(root.value), 12) << "\n";
  os << "mahler measure: " << fmt(r["mahler"].get<double>(), 12) << "\n";
  out.text = os.str();
  return out;
}

}  // namespace subcocycle::cli

#include "subcocycle/serialize.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

namespace subcocycle {

namespace {

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

json serialize(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

json serialize(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(serialize(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json serialize(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(serialize(c));
  return out;
}

json serialize(const TrigMatrix& m) {
  json entries = json::array();
  for (std::size_t b = 0; b < m.dimension(); ++b) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dimension(); ++c) {
      json terms = json::array();
      for (const auto& [freq, coeff] : m(b, c).terms()) terms.push_back(json::array({freq, serialize(coeff)}));
      row.push_back(std::move(terms));
    }
    entries.push_back(std::move(row));
  }
  return {{"d", m.dimension()}, {"entries", std::move(entries)}};
}

json serialize(const Substitution& sub, unsigned letter_offset) {
  json images = json::array();
  for (const Word& w : sub.images()) {
    json word = json::array();
    for (Letter l : w) word.push_back(l + letter_offset);
    images.push_back(std::move(word));
  }
  return {{"text", to_string(sub, letter_offset)}, {"alphabet_size", sub.alphabet_size()}, {"images", std::move(images)}};
}

json serialize(const LyapunovEstimate& e) {
  json out = {{"k", e.k}, {"method", to_string(e.method)}, {"value", e.value}, {"std_error", e.std_error}};
  if (e.method == Method::mc_integral) {
    out["samples"] = e.samples;
    out["seed"] = e.seed;
    out["sampler"] = to_string(e.sampler);
    out["rejected"] = e.rejected;
    out["flagged"] = e.flagged;
  } else if (e.method == Method::birkhoff) {
    out["N"] = e.samples;
  }
  return out;
}

json serialize(const ExponentReport& r) {
  json table = json::array();
  for (const auto& e : r.table) table.push_back(serialize(e));
  return {{"table", std::move(table)},
          {"best", r.best},
          {"best_std_error", r.best_std_error},
          {"best_method", to_string(r.best_method)},
          {"half_log_theta", r.half_log_theta},
          {"margin", r.margin},
          {"skipped_k", r.skipped_k}};
}

json serialize(const Verdict& v) {
  json ledger = json::array();
  for (const auto& h : v.ledger) ledger.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
  json evidence;
  if (const auto* report = std::get_if<ExponentReport>(&v.evidence)) {
    evidence = {{"kind", "exponent_report"}, {"report", serialize(*report)}};
  } else {
    const auto& b = std::get<AnalyticBound>(v.evidence);
    evidence = {{"kind", "analytic_bound"}, {"name", b.name}, {"value", b.value}};
  }
  return {{"checker", v.checker},
          {"conclusion", to_string(v.conclusion)},
          {"ledger", std::move(ledger)},
          {"aperiodicity", to_string(v.aperiodicity)},
          {"half_log_theta", v.half_log_theta},
          {"bound", v.bound},
          {"margin", v.margin},
          {"evidence", std::move(evidence)},
          {"roots_outside_unit_disk", v.roots_outside_disk},
          {"degree", v.degree},
          {"notes", v.notes}};
}

json serialize(const NumberClass& c) {
  return {{"kind", to_string(c.kind)},
          {"value", c.value},
          {"conjugate_moduli", c.conjugate_moduli},
          {"exact", c.exact}};
}

json serialize(const RootSet& r) {
  json out = json::array();
  for (const Root& root : r.roots)
    out.push_back({{"re", root.value.real()},
                   {"im", root.value.imag()},
                   {"modulus", std::abs(root.value)},
                   {"multiplicity", root.multiplicity},
                   {"residual_bound", root.residual_bound},
                   {"error_bound", root.error_bound}});
  return out;
}

json serialize(const FamilyBound& b) {
  return {{"bound", b.bound}, {"lemma_threshold", b.lemma_threshold}, {"corollary_threshold", b.corollary_threshold}};
}

json serialize(const LoopResult& loop) {
  json path = json::array();
  for (const auto& p : loop.path) path.push_back(to_string(p));
  return {{"path", std::move(path)},
          {"substitution", serialize(loop.substitution, 1)},
          {"matrix", serialize(loop.matrix)},
          {"char_poly", serialize(char_poly(loop.matrix))},
          {"char_poly_text", to_string(char_poly(loop.matrix))}};
}

json serialize(const RauzyDiagram& diagram) {
  json vertices = json::array(), edges = json::array();
  for (const auto& v : diagram.vertices) vertices.push_back(to_string(v));
  for (const auto& e : diagram.edges)
    edges.push_back({{"from", to_string(e.from)}, {"to", to_string(e.to)}, {"move", std::string(1, to_char(e.move))}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json serialize(const std::vector<WeylSum>& sums) {
  json out = json::array();
  for (const auto& s : sums) out.push_back({{"frequency", s.frequency}, {"modulus", s.modulus}});
  return out;
}

std::string to_csv(const ExponentReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "k,method,value,std_error,samples\n";
  for (const auto& e : r.table)
    os << e.k << ',' << to_string(e.method) << ',' << e.value << ',' << e.std_error << ',' << e.samples << '\n';
  return os.str();
}

std::string to_table(const ExponentReport& r) {
  std::ostringstream os;
  os << "  k  method            value        std_error    samples\n";
  for (const auto& e : r.table) {
    char line[160];
    std::snprintf(line, sizeof line, "%3u  %-16s  %11.6f  %11.6f  %8llu\n", e.k, to_string(e.method), e.value,
                  e.std_error, static_cast<unsigned long long>(e.samples));
    os << line;
  }
  os << "best (with 3 sigma): " << fixed(r.best) << "\n";
  os << "log(theta_1)/2:      " << fixed(r.half_log_theta) << "\n";
  os << "margin:              " << fixed(r.margin) << "\n";
  return os.str();
}

std::string to_table(const Verdict& v) {
  std::ostringstream os;
  os << "checker:     " << v.checker << "\n";
  os << "conclusion:  " << to_string(v.conclusion) << "\n";
  os << "hypotheses:\n";
  for (const auto& h : v.ledger) {
    char line[96];
    std::snprintf(line, sizeof line, "  %-40s %-9s", h.name.c_str(), to_string(h.status));
    os << line << (h.detail.empty() ? "" : "  " + h.detail) << "\n";
  }
  os << "aperiodicity route: " << to_string(v.aperiodicity) << "\n";
  if (const auto* b = std::get_if<AnalyticBound>(&v.evidence))
    os << "evidence:    analytic bound " << b->name << " = " << fixed(b->value) << "\n";
  else
    os << "evidence:    exponent report (" << std::get<ExponentReport>(v.evidence).table.size() << " rows)\n";
  os << "bound:       " << fixed(v.bound) << "\n";
  os << "log(theta_1)/2: " << fixed(v.half_log_theta) << "\n";
  os << "margin:      " << fixed(v.margin) << "\n";
  os << "roots outside the unit disk: " << v.roots_outside_disk << " of " << v.degree << "\n";
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace subcocycle

#include "subcocycle/verdict.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "subcocycle/error.hpp"
#include "subcocycle/mahler.hpp"
#include "subcocycle/number_theory.hpp"
#include "subcocycle/polynomial.hpp"
#include "subcocycle/roots.hpp"

namespace subcocycle {

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::pure_singular_analytic:
      return "pure_singular_analytic";
    case Conclusion::pure_singular_numeric:
      return "pure_singular_numeric";
    case Conclusion::inconclusive:
      return "inconclusive";
    case Conclusion::hypotheses_violated:
      return "hypotheses_violated";
  }
  return "inconclusive";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::asserted:
      return "asserted";
    case CheckStatus::unknown:
      return "unknown";
  }
  return "unknown";
}

const char* to_string(AperiodicityRoute r) {
  switch (r) {
    case AperiodicityRoute::sufficient_condition:
      return "sufficient_condition";
    case AperiodicityRoute::asserted:
      return "asserted";
    case AperiodicityRoute::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

struct Shared {
  IntMatrix s;
  IntPolynomial p;
  bool primitive = false;
};

Shared shared_checks(Verdict& v, const Substitution& sub) {
  Shared out{substitution_matrix(sub), {}, false};
  out.p = char_poly(out.s);
  const std::size_t d = sub.alphabet_size();
  v.degree = static_cast<int>(d);
  out.primitive = is_primitive(out.s);
  v.ledger.push_back({"primitive", status_of(out.primitive), ""});
  const BigInt det = out.s.determinant();
  v.ledger.push_back({"invertible", status_of(det != 0), "det S = " + det.str()});
  for (const Root& r : roots(out.p).roots)
    if (std::abs(r.value) > 1 + 1e-9) v.roots_outside_disk += static_cast<int>(r.multiplicity);
  return out;
}

void set_aperiodicity(Verdict& v, bool sufficient, bool assert_aperiodic, const std::string& reason) {
  if (sufficient) {
    v.aperiodicity = AperiodicityRoute::sufficient_condition;
    v.ledger.push_back({"aperiodic", CheckStatus::pass, reason});
  } else if (assert_aperiodic) {
    v.aperiodicity = AperiodicityRoute::asserted;
    v.ledger.push_back({"aperiodic", CheckStatus::asserted, "asserted by the user"});
  } else {
    v.aperiodicity = AperiodicityRoute::unknown;
    v.ledger.push_back({"aperiodic", CheckStatus::unknown, "no sufficient condition applies; pass --assert-aperiodic"});
  }
}

void conclude(Verdict& v, const Substitution& sub, const Evidence& evidence) {
  v.evidence = evidence;
  v.half_log_theta = half_log_theta(sub);
  bool exact = true;
  if (const auto* report = std::get_if<ExponentReport>(&evidence)) {
    v.bound = report->best;
    exact = report->best_method == Method::entrywise_bound || report->best_method == Method::analytic_bound;
  } else {
    v.bound = std::get<AnalyticBound>(evidence).value;
  }
  v.margin = v.half_log_theta - v.bound;

  bool unknown = false;
  for (const auto& h : v.ledger) {
    if (h.status == CheckStatus::fail) {
      v.conclusion = Conclusion::hypotheses_violated;
      return;
    }
    if (h.status == CheckStatus::unknown) unknown = true;
  }
  if (unknown || !(v.margin > 0)) {
    v.conclusion = Conclusion::inconclusive;
    return;
  }
  v.conclusion = exact ? Conclusion::pure_singular_analytic : Conclusion::pure_singular_numeric;
}

}  // namespace

Verdict check_theorem1(const Substitution& sub, const Evidence& evidence, bool assert_aperiodic) {
  Verdict v;
  v.checker = "theorem1";
  const std::size_t d = sub.alphabet_size();
  v.ledger.push_back({"alphabet_at_least_2", status_of(d >= 2), "d = " + std::to_string(d)});
  const Shared sh = shared_checks(v, sub);

  CheckStatus irreducible = CheckStatus::unknown;
  std::string detail = to_string(sh.p);
  try {
    irreducible = status_of(is_irreducible_over_q(sh.p));
  } catch (const UndecidedError& e) {
    detail += "; " + std::string(e.what());
  } catch (const std::domain_error& e) {
    detail += "; " + std::string(e.what());
  }
  v.ledger.push_back({"irreducible_char_poly", irreducible, detail});

  set_aperiodicity(v, irreducible == CheckStatus::pass && sh.p.degree() >= 2, assert_aperiodic,
                   "irreducible characteristic polynomial of degree >= 2, so theta_1 is irrational");
  conclude(v, sub, evidence);
  return v;
}

Verdict check_theorem2(const Substitution& sub, const Evidence& evidence, bool assert_aperiodic) {
  if (sub.alphabet_size() != 2) {
    Verdict v = check_theorem1(sub, evidence, assert_aperiodic);
    v.notes.push_back("alphabet size " + std::to_string(sub.alphabet_size()) +
                      " is not 2; routed to the theorem1 checker");
    return v;
  }
  Verdict v;
  v.checker = "theorem2";
  v.ledger.push_back({"alphabet_is_2", CheckStatus::pass, "d = 2"});
  const Shared sh = shared_checks(v, sub);
  v.ledger.push_back({"non_constant_length", status_of(!is_constant_length(sub)), ""});

  // x^2 - t x + det has integer roots iff its discriminant is a square.
  const BigInt t = sh.s.trace(), det = sh.s.determinant();
  const BigInt disc = t * t - 4 * det;
  bool integer_roots = false;
  std::string detail = "discriminant " + disc.str() + " is not a perfect square";
  if (disc >= 0) {
    const BigInt root = boost::multiprecision::sqrt(disc);
    if (root * root == disc) {
      const BigInt r1 = (t + root) / 2, r2 = (t - root) / 2;
      integer_roots = abs(r1) > 1 && abs(r2) > 1;
      detail = "eigenvalues " + r1.str() + " and " + r2.str();
    }
  }
  v.ledger.push_back({"integer_eigenvalues_outside_unit_disk", status_of(integer_roots), detail});
  set_aperiodicity(v, false, assert_aperiodic, "");
  conclude(v, sub, evidence);
  return v;
}

FamilyBound family_bound_lemma52(unsigned d, std::uint64_t norm1_sq, std::uint64_t norm2_sq) {
  if (d < 2) throw std::invalid_argument("family_bound_lemma52: d must be at least 2");
  if (norm1_sq == 0 || norm2_sq == 0) throw std::invalid_argument("family_bound_lemma52: norms must be positive");
  const BigInt k = BigInt(norm1_sq) * norm2_sq;
  // T = (d + 2) K + sqrt(4 K^2 (d + 1)); the first part is an integer.
  const BigInt radicand = 4 * k * k * (d + 1);
  const BigInt floor_t = (d + 2) * k + boost::multiprecision::sqrt(radicand);
  if (floor_t + 1 > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("family_bound_lemma52: threshold exceeds 64 bits");

  const long long dd = d;
  const double log_factor = mahler_jensen(IntPolynomial{dd, -(2 * dd + 4), dd});
  FamilyBound out;
  out.bound = 0.5 * log_factor + 0.5 * (std::log(static_cast<double>(norm1_sq)) + std::log(static_cast<double>(norm2_sq)));
  out.lemma_threshold = static_cast<std::uint64_t>(floor_t);
  out.corollary_threshold = static_cast<std::uint64_t>(floor_t + 1);
  return out;
}

double example51_bound() {
  return 0.5 * (mahler_jensen(IntPolynomial{5, -14, 5}) - mahler_jensen(IntPolynomial{1, -2, 1}));
}

}  // namespace subcocycle

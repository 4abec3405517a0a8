#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "subcocycle/iet.hpp"
#include "subcocycle/verdict.hpp"

using namespace subcocycle;

namespace {

const HypothesisCheck& entry(const Verdict& v, const std::string& name) {
  for (const auto& h : v.ledger)
    if (h.name == name) return h;
  FAIL("missing ledger entry " << name);
  return v.ledger.front();
}

bool sound(const Verdict& v) {
  if (v.conclusion != Conclusion::pure_singular_analytic && v.conclusion != Conclusion::pure_singular_numeric)
    return true;
  for (const auto& h : v.ledger)
    if (h.status != CheckStatus::pass && h.status != CheckStatus::asserted) return false;
  return v.margin > 0;
}

}  // namespace

TEST_CASE("zeta_m family bound") {
  const double b = example51_bound();
  CHECK(std::abs(b - 0.5 * std::log(7 + 2 * std::sqrt(6.0))) < 1e-9);
  CHECK(b < 0.5 * std::log(12.0));
  CHECK(b > 0.5 * std::log(11.0));
}

TEST_CASE("zeta_m family verdicts") {
  const AnalyticBound bound{"example51", example51_bound()};
  for (unsigned m = 12; m <= 20; ++m) {
    const Verdict v = check_theorem1(family_zeta_m(m), bound);
    CHECK(v.conclusion == Conclusion::pure_singular_analytic);
    CHECK(v.aperiodicity == AperiodicityRoute::sufficient_condition);
    CHECK(sound(v));
  }
  for (unsigned m = 3; m <= 11; ++m) {
    const Verdict v = check_theorem1(family_zeta_m(m), bound);
    CHECK(v.conclusion == Conclusion::inconclusive);
    CHECK(v.margin < 0);
  }
}

TEST_CASE("Thue-Morse violates the hypotheses of both checkers") {
  const Substitution tm = parse_substitution("0->01;1->10");
  const AnalyticBound bound{"user", 0.0};
  const Verdict v1 = check_theorem1(tm, bound);
  CHECK(v1.conclusion == Conclusion::hypotheses_violated);
  CHECK(entry(v1, "invertible").status == CheckStatus::fail);
  const Verdict v2 = check_theorem2(tm, bound, true);
  CHECK(v2.conclusion == Conclusion::hypotheses_violated);
  CHECK(entry(v2, "non_constant_length").status == CheckStatus::fail);
  CHECK(entry(v2, "invertible").status == entry(v1, "invertible").status);
  CHECK(entry(v2, "primitive").status == entry(v1, "primitive").status);
}

TEST_CASE("Fibonacci stays inconclusive at the default depth") {
  const Substitution fib = parse_substitution("0->01;1->0");
  const Verdict v = check_theorem1(fib, inf_exponent(fib, 4, 20000, 1));
  CHECK(v.conclusion == Conclusion::inconclusive);
  CHECK(entry(v, "irreducible_char_poly").status == CheckStatus::pass);
  CHECK(v.margin <= 0);
}

TEST_CASE("two-letter example with integer eigenvalues") {
  const Substitution s = parse_substitution("0->0001;1->0000111111");
  const AnalyticBound generous{"user", 0.1};
  const Verdict unasserted = check_theorem2(s, generous);
  CHECK(entry(unasserted, "integer_eigenvalues_outside_unit_disk").status == CheckStatus::pass);
  CHECK(entry(unasserted, "integer_eigenvalues_outside_unit_disk").detail == "eigenvalues 7 and 2");
  CHECK(entry(unasserted, "non_constant_length").status == CheckStatus::pass);
  CHECK(entry(unasserted, "aperiodic").status == CheckStatus::unknown);
  CHECK(unasserted.conclusion == Conclusion::inconclusive);
  const Verdict asserted = check_theorem2(s, generous, true);
  CHECK(asserted.aperiodicity == AperiodicityRoute::asserted);
  CHECK(asserted.conclusion == Conclusion::pure_singular_analytic);
  CHECK(asserted.half_log_theta == doctest::Approx(0.5 * std::log(7.0)));
  CHECK(sound(asserted));
  // Reducible characteristic polynomial: the general checker refuses.
  CHECK(check_theorem1(s, generous, true).conclusion == Conclusion::hypotheses_violated);
}

TEST_CASE("other alphabet sizes are routed to the general checker") {
  const Verdict v = check_theorem2(family_zeta_m(12), AnalyticBound{"example51", example51_bound()});
  CHECK(v.checker == "theorem1");
  CHECK(v.notes.size() == 1);
  CHECK(v.conclusion == Conclusion::pure_singular_analytic);
}

TEST_CASE("numeric evidence is labeled as such") {
  const Substitution z20 = family_zeta_m(20);
  const Verdict v = check_theorem1(z20, inf_exponent(z20, 1, 5000, 3));
  CHECK(v.conclusion == Conclusion::pure_singular_numeric);
  CHECK(sound(v));
  const ExponentReport& r = std::get<ExponentReport>(v.evidence);
  CHECK(v.bound == r.best);
}

TEST_CASE("family thresholds") {
  const FamilyBound b = family_bound_lemma52(4, 11, 8);
  CHECK(b.lemma_threshold == 921);
  CHECK(b.corollary_threshold == 922);
  CHECK(b.bound == doctest::Approx(0.5 * std::log(6 + 2 * std::sqrt(5.0)) + 0.5 * (std::log(11.0) + std::log(8.0))));
  // Least n with n + 1 > 4 + 2 sqrt 3 = 7.46...
  CHECK(family_bound_lemma52(2, 1, 1).lemma_threshold == 7);
  CHECK(family_bound_lemma52(2, 1, 1).corollary_threshold == 8);
  // d + 1 a perfect square makes T an integer: T = 9 for d = 3.
  CHECK(family_bound_lemma52(3, 1, 1).lemma_threshold == 9);
  CHECK(family_bound_lemma52(3, 1, 1).corollary_threshold == 10);

  // Brute-force oracle: scan n with the defining inequalities in long double.
  for (unsigned d = 2; d <= 6; ++d)
    for (std::uint64_t n1 = 1; n1 <= 12; n1 += 5)
      for (std::uint64_t n2 = 1; n2 <= 12; n2 += 4) {
        const long double t = (d + 2 + 2 * std::sqrt(static_cast<long double>(d + 1))) * n1 * n2;
        std::uint64_t lemma = 0, corollary = 0;
        while (!(lemma + 1 > t)) ++lemma;
        while (!(corollary > t)) ++corollary;
        const FamilyBound fb = family_bound_lemma52(d, n1, n2);
        CHECK(fb.lemma_threshold == lemma);
        CHECK(fb.corollary_threshold == corollary);
        CHECK(family_bound_lemma52(d, n1 + 1, n2).lemma_threshold >= fb.lemma_threshold);
        CHECK(family_bound_lemma52(d, n1, n2 + 1).lemma_threshold >= fb.lemma_threshold);
      }
  CHECK_THROWS(family_bound_lemma52(1, 1, 1));
  CHECK_THROWS(family_bound_lemma52(4, 0, 1));
}

TEST_CASE("ledger is always fully populated") {
  for (const auto& [name, text] : oracle::battery()) {
    const Substitution s = parse_substitution(text);
    const Verdict v = check_theorem1(s, AnalyticBound{"user", 0.0});
    CHECK(v.ledger.size() == 5);
    CHECK(v.degree == static_cast<int>(s.alphabet_size()));
    CHECK(sound(v));
  }
  const Verdict one = check_theorem1(parse_substitution("0->00"), AnalyticBound{"user", 0.0});
  CHECK(one.conclusion == Conclusion::hypotheses_violated);
}

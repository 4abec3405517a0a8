#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "subcocycle/lyapunov.hpp"
#include "subcocycle/substitution.hpp"

namespace subcocycle {

enum class Conclusion { pure_singular_analytic, pure_singular_numeric, inconclusive, hypotheses_violated };
enum class CheckStatus { pass, fail, asserted, unknown };
enum class AperiodicityRoute { sufficient_condition, asserted, unknown };

const char* to_string(Conclusion c);
const char* to_string(CheckStatus s);
const char* to_string(AperiodicityRoute r);

struct HypothesisCheck {
  std::string name;
  CheckStatus status = CheckStatus::unknown;
  std::string detail;
};

/// A closed-form upper bound on the top Lyapunov exponent.
struct AnalyticBound {
  std::string name;
  double value = 0.0;
};

using Evidence = std::variant<ExponentReport, AnalyticBound>;

struct Verdict {
  std::string checker;  // "theorem1" or "theorem2"
  Conclusion conclusion = Conclusion::inconclusive;
  std::vector<HypothesisCheck> ledger;
  AperiodicityRoute aperiodicity = AperiodicityRoute::unknown;
  Evidence evidence;
  double half_log_theta = 0.0;
  double bound = 0.0;   // best exponent estimate (with 3 sigma) or the analytic bound
  double margin = 0.0;  // half_log_theta - bound
  /// Roots of the characteristic polynomial outside the closed unit disk;
  /// informational only.
  int roots_outside_disk = 0;
  int degree = 0;
  std::vector<std::string> notes;
};

/// General alphabet: d >= 2, primitive, det S != 0, irreducible characteristic
/// polynomial, aperiodic; then chi < (log theta_1) / 2 is tested.
Verdict check_theorem1(const Substitution& sub, const Evidence& evidence, bool assert_aperiodic = false);

/// Two letters, non-constant length, two integer eigenvalues of modulus > 1.
/// Other alphabet sizes are routed to check_theorem1 with a note.
Verdict check_theorem2(const Substitution& sub, const Evidence& evidence, bool assert_aperiodic = false);

struct FamilyBound {
  double bound = 0.0;  // (1/2) log(d + 2 + 2 sqrt(d + 1)) + (1/2) log(norm1_sq * norm2_sq)
  std::uint64_t lemma_threshold = 0;      // least n with n + 1 > T
  std::uint64_t corollary_threshold = 0;  // least n with n > T
};

/// T = (d + 2 + 2 sqrt(d + 1)) * norm1_sq * norm2_sq; thresholds are exact.
FamilyBound family_bound_lemma52(unsigned d, std::uint64_t norm1_sq, std::uint64_t norm2_sq);

/// (1/2) log(7 + 2 sqrt 6) as (m(5z^2 - 14z + 5) - m((z - 1)^2)) / 2.
double example51_bound();

}  // namespace subcocycle

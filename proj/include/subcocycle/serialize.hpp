#pragma once

#include <string>

#include <json.hpp>

#include "subcocycle/iet.hpp"
#include "subcocycle/int_matrix.hpp"
#include "subcocycle/lyapunov.hpp"
#include "subcocycle/number_theory.hpp"
#include "subcocycle/polynomial.hpp"
#include "subcocycle/roots.hpp"
#include "subcocycle/substitution.hpp"
#include "subcocycle/trig_poly.hpp"
#include "subcocycle/verdict.hpp"

namespace subcocycle {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json serialize(const BigInt& value);
json serialize(const IntMatrix& m);
/// Coefficient list, constant term first.
json serialize(const IntPolynomial& p);
/// {"d": d, "entries": [[ [[k...], c], ... ]]} with entries[b][c] a term list.
json serialize(const TrigMatrix& m);
json serialize(const Substitution& sub, unsigned letter_offset = 0);
json serialize(const LyapunovEstimate& e);
json serialize(const ExponentReport& r);
json serialize(const Verdict& v);
json serialize(const NumberClass& c);
json serialize(const RootSet& r);
json serialize(const FamilyBound& b);
json serialize(const LoopResult& loop);
json serialize(const RauzyDiagram& diagram);
json serialize(const std::vector<WeylSum>& sums);

/// Columns k, method, value, std_error, samples.
std::string to_csv(const ExponentReport& r);
std::string to_table(const ExponentReport& r);
std::string to_table(const Verdict& v);

}  // namespace subcocycle

#include <doctest.h>

#include <sstream>

#include "subcocycle/cocycle.hpp"
#include "subcocycle/serialize.hpp"

using namespace subcocycle;

TEST_CASE("integers switch to strings past 64 bits") {
  CHECK(serialize(BigInt(-42)) == json(-42));
  const BigInt big = BigInt(1) << 80;
  CHECK(serialize(big) == json("1208925819614629174706176"));
}

TEST_CASE("substitution and matrix shapes") {
  const Substitution fib = parse_substitution("0->01;1->0");
  const json j = serialize(fib);
  CHECK(j["alphabet_size"] == 2);
  CHECK(j["images"] == json::parse("[[0,1],[0]]"));
  CHECK(serialize(fib, 1)["images"] == json::parse("[[1,2],[1]]"));
  CHECK(serialize(substitution_matrix(fib)) == json::parse("[[1,1],[1,0]]"));
  CHECK(serialize(char_poly(substitution_matrix(fib))) == json::parse("[-1,-1,1]"));
}

TEST_CASE("cocycle matrix term lists") {
  const json j = serialize(build_cocycle_matrix(parse_substitution("0->01;1->0")));
  CHECK(j["d"] == 2);
  REQUIRE(j["entries"].size() == 2);
  // M(0,0) and M(1,0) have the constant term; M(0,1) carries frequency (1,0).
  CHECK(j["entries"][0][0] == json::parse("[[[0,0],1]]"));
  CHECK(j["entries"][0][1] == json::parse("[[[1,0],1]]"));
  CHECK(j["entries"][1][1] == json::array());
}

TEST_CASE("exponent report round trip through text") {
  const ExponentReport r = entrywise_report(parse_substitution("0->01;1->0"), 3);
  const json j = serialize(r);
  for (const char* key : {"table", "best", "best_std_error", "best_method", "half_log_theta", "margin", "skipped_k"})
    CHECK(j.contains(key));
  CHECK(json::parse(j.dump()) == j);
  CHECK(j["table"].size() == r.table.size());
  CHECK(j["table"][0]["method"] == "entrywise_bound");
  CHECK_FALSE(j["table"][0].contains("seed"));

  const std::string csv = to_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,method,value,std_error,samples");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == r.table.size());
}

TEST_CASE("verdict fields") {
  const Verdict v = check_theorem1(family_zeta_m(12), AnalyticBound{"example51", example51_bound()});
  const json j = serialize(v);
  CHECK(j["checker"] == "theorem1");
  CHECK(j["conclusion"] == "pure_singular_analytic");
  CHECK(j["evidence"]["kind"] == "analytic_bound");
  CHECK(j["ledger"].size() == v.ledger.size());
  for (const auto& h : j["ledger"]) CHECK(h["status"] == "pass");
  CHECK(to_table(v).find("conclusion:  pure_singular_analytic") != std::string::npos);
}

TEST_CASE("threshold and loop payloads") {
  const json b = serialize(family_bound_lemma52(4, 11, 8));
  CHECK(b["lemma_threshold"] == 921);
  CHECK(b["corollary_threshold"] == 922);
  const json loop = serialize(loop_substitution(family_loop(1)));
  CHECK(loop["substitution"]["text"] == "1->14;2->14224;3->14232324;4->142324");
  CHECK(loop["char_poly_text"].is_string());
  CHECK(loop["path"].size() == 10);
}

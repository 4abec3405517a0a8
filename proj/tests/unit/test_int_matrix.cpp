#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "subcocycle/int_matrix.hpp"

using namespace subcocycle;

TEST_CASE("determinant matches the Leibniz expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 1 + trial % 5;
    IntMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = entry(rng);
    CHECK(m.determinant() == oracle::leibniz_det(m));
  }
}

TEST_CASE("determinant of singular and small matrices") {
  CHECK(IntMatrix{{1, 1}, {1, 1}}.determinant() == 0);
  CHECK(IntMatrix{{0, 1}, {1, 0}}.determinant() == -1);
  CHECK(IntMatrix{{3, 4}, {1, 6}}.determinant() == 14);
  CHECK(IntMatrix(std::size_t{0}).determinant() == 1);
}

TEST_CASE("power agrees with repeated multiplication") {
  const IntMatrix a{{1, 1, 0}, {1, 0, 1}, {0, 1, 2}};
  IntMatrix p = IntMatrix::identity(3);
  for (unsigned n = 0; n < 12; ++n) {
    CHECK(a.pow(n) == p);
    p = oracle::multiply(p, a);
  }
}

TEST_CASE("entry sum, trace and Frobenius norm") {
  const IntMatrix a{{3, 1, 0}, {1, 1, 1}, {0, 1, 0}};
  CHECK(a.entry_sum() == 8);
  CHECK(a.trace() == 4);
  CHECK(a.frobenius_norm_sq() == 14);
  CHECK(a.transpose()(0, 1) == 1);
  CHECK(a.is_nonnegative());
  CHECK_FALSE(IntMatrix{{1, -1}, {0, 1}}.is_nonnegative());
}

TEST_CASE("log_big is accurate far beyond double range") {
  CHECK(log_big(BigInt(1)) == 0.0);
  CHECK(log_big(BigInt(7)) == doctest::Approx(std::log(7.0)).epsilon(1e-15));
  const BigInt huge = BigInt(1) << 5000;
  CHECK(log_big(huge) == doctest::Approx(5000 * std::log(2.0)).epsilon(1e-14));
  const BigInt ten = boost::multiprecision::pow(BigInt(10), 400) * 3;
  CHECK(log_big(ten) == doctest::Approx(400 * std::log(10.0) + std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("to_string renders rows") { CHECK(to_string(IntMatrix{{1, 2}, {3, 4}}) == "[[1, 2], [3, 4]]"); }

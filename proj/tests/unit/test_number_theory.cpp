#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "subcocycle/error.hpp"
#include "subcocycle/number_theory.hpp"
#include "subcocycle/roots.hpp"

using namespace subcocycle;

namespace {

IntPolynomial p_n(long long n) { return IntPolynomial{1, -(n + 6), n + 10, -(n + 6), 1}; }
IntPolynomial zeta_m_poly(long long m) { return IntPolynomial{m, m - 2, -(m + 1), 1}; }

IntPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<BigInt> coeffs(degree + 1);
  for (auto& x : coeffs) x = c(rng);
  if (coeffs.back() == 0) coeffs.back() = 1;
  return IntPolynomial(coeffs);
}

}  // namespace

TEST_CASE("irreducibility of the named polynomials") {
  CHECK(is_irreducible_over_q(zeta_m_poly(3)));
  for (long long n = 1; n <= 10; ++n) CHECK(is_irreducible_over_q(p_n(n)));
  CHECK_FALSE(is_irreducible_over_q(IntPolynomial{-1, 0, 1}));
  CHECK(is_irreducible_over_q(IntPolynomial{1, 0, 0, 0, 1}));      // x^4 + 1, no rational factor
  CHECK_FALSE(is_irreducible_over_q(IntPolynomial{4, 0, 0, 0, 1}));  // (x^2 - 2x + 2)(x^2 + 2x + 2)
  CHECK(is_irreducible_over_q(IntPolynomial{-2, 0, 0, 1}));         // x^3 - 2
  CHECK(is_irreducible_over_q(IntPolynomial{3, 2}));
  CHECK_FALSE(is_irreducible_over_q(IntPolynomial{1, -2, 1}));
  CHECK_FALSE(is_irreducible_over_q(IntPolynomial{6, 4, 2}.primitive_part() * IntPolynomial{1, 1}));
  CHECK_THROWS_AS(is_irreducible_over_q(IntPolynomial::monomial(13) + IntPolynomial{1}), std::domain_error);
}

TEST_CASE("products of random factors are recognized as reducible") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const IntPolynomial a = random_poly(rng, 1 + trial % 3);
    const IntPolynomial b = random_poly(rng, 1 + trial % 4);
    if (a.degree() < 1 || b.degree() < 1) continue;
    CHECK_FALSE(is_irreducible_over_q(a * b));
  }
}

TEST_CASE("irreducibility agrees with a rational-root oracle on cubics") {
  // A cubic is reducible over Q iff it has a rational root p/q with p | a0, q | a3.
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 80; ++trial) {
    const IntPolynomial f = random_poly(rng, 3).primitive_part();
    if (f.degree() != 3) continue;
    const long long a0 = static_cast<long long>(f.coefficient(0)), a3 = static_cast<long long>(f.coefficient(3));
    bool rational_root = a0 == 0;
    for (long long p = 1; p <= std::abs(a0) && !rational_root; ++p)
      for (long long q = 1; q <= std::abs(a3) && !rational_root; ++q) {
        if (a0 % p || a3 % q) continue;
        for (long long s : {p, -p}) {
          // q^3 f(s/q) = a3 s^3 + a2 s^2 q + a1 s q^2 + a0 q^3
          const BigInt v = f.coefficient(3) * s * s * s + f.coefficient(2) * s * s * q + f.coefficient(1) * s * q * q +
                           f.coefficient(0) * q * q * q;
          if (v == 0) rational_root = true;
        }
      }
    CHECK(is_irreducible_over_q(f) == !rational_root);
  }
}

TEST_CASE("power irreducibility") {
  const IntMatrix s3{{3, 1, 0}, {1, 1, 1}, {0, 1, 0}};
  for (unsigned n = 2; n <= 4; ++n) {
    CHECK(dominance_condition(s3, n));
    CHECK(power_irreducible(s3, n));
  }
  const IntMatrix swap{{0, 1}, {1, 0}};
  CHECK_FALSE(dominance_condition(swap, 2));
  CHECK_FALSE(power_irreducible(swap, 2));
  CHECK_FALSE(is_irreducible_over_q(char_poly(swap.pow(2))));
  for (long long n = 1; n <= 5; ++n) {
    const IntMatrix s{{1, 1, 1, 1}, {0, 2, n + 2, n + 1}, {0, 0, n + 1, n}, {1, 2, 2, 2}};
    CHECK(dominance_condition(s, 3));
  }
}

TEST_CASE("Pisot, Salem and neither") {
  const NumberClass fib = classify_number(IntPolynomial{-1, -1, 1});
  CHECK(fib.kind == NumberKind::pisot);
  CHECK(fib.value == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  for (long long n = 1; n <= 10; ++n) {
    const NumberClass c = classify_number(p_n(n));
    CHECK(c.kind == NumberKind::salem);
    CHECK(c.exact);
    CHECK(c.value > n);
    CHECK(c.value > n + 2 - 2.0 / n);
    CHECK(c.value < n + 7);
  }
  for (long long m = 3; m <= 20; ++m) CHECK(classify_number(zeta_m_poly(m)).kind == NumberKind::neither);
  CHECK(classify_number(IntPolynomial{-2, 1}).kind == NumberKind::pisot);
  // Lehmer's polynomial: the smallest known Salem number.
  const NumberClass lehmer = classify_number(IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  CHECK(lehmer.kind == NumberKind::salem);
  CHECK(lehmer.value == doctest::Approx(1.17628081826));
  CHECK_THROWS_AS(classify_number(IntPolynomial{-1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(classify_number(IntPolynomial{-1, 0, 1}), std::invalid_argument);
}

TEST_CASE("Salem root sets are closed under inversion") {
  for (long long n = 1; n <= 10; ++n) {
    const auto zs = roots(p_n(n)).expanded();
    for (auto z : zs) {
      const auto inv = 1.0 / z;
      bool found = false;
      for (auto w : zs) found |= std::abs(w - inv) < 1e-8;
      CHECK(found);
    }
  }
}

TEST_CASE("reciprocal reduction") {
  CHECK(reciprocal_reduce(IntPolynomial{1, 1, 2, 1, 1}) == IntPolynomial{0, 1, 1});
  for (long long n = 1; n <= 10; ++n) {
    const IntPolynomial y = reciprocal_reduce(p_n(n));
    CHECK(y == IntPolynomial{n + 8, -(n + 6), 1});
    const IntPolynomial w = reciprocal_reduce_shifted(p_n(n));
    const double nn = static_cast<double>(n);
    const double disc = std::sqrt((nn + 2) * (nn + 2) + 4 * nn);
    for (double expected : {((nn + 2) + disc) / 2, ((nn + 2) - disc) / 2}) {
      const auto rs = roots(w).expanded();
      bool found = false;
      for (auto z : rs) found |= std::abs(z - expected) < 1e-10;
      CHECK(found);
    }
    // lambda + 1/lambda = y: solving back gives roots of p_n.
    for (auto yv : roots(y).expanded()) {
      const auto lambda = (yv + std::sqrt(yv * yv - 4.0)) / 2.0;
      CHECK(std::abs(p_n(n).evaluate(std::complex<long double>(lambda))) < 1e-10 * std::pow(std::abs(lambda) + 1, 4));
    }
  }
  CHECK_THROWS_AS(reciprocal_reduce(IntPolynomial{1, 2, 3, 4, 1}), std::invalid_argument);
  CHECK(std::string(to_string(NumberKind::salem)) == "Salem");
}

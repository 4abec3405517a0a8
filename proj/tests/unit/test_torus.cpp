#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "subcocycle/torus.hpp"

using namespace subcocycle;

TEST_CASE("from_reals stores doubles exactly") {
  const std::vector<double> xs{0.25, 0.1, 0.999999999, -0.3, 2.75};
  const TorusPoint p = TorusPoint::from_reals(xs);
  CHECK(p.is_dyadic());
  CHECK(p.coordinate(0) == 0.25);
  CHECK(p.coordinate(1) == 0.1);
  CHECK(p.coordinate(2) == 0.999999999);
  CHECK(p.coordinate(3) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(p.coordinate(4) == 0.75);
}

TEST_CASE("phase is reduced to [-1/2, 1/2)") {
  const std::vector<std::int64_t> num{1, 2};
  const TorusPoint p = TorusPoint::from_rational(num, 3);
  const std::vector<std::int64_t> k1{1, 0}, k2{1, 1}, k3{3, 5};
  CHECK(p.phase(k1) == doctest::Approx(1.0 / 3));
  CHECK(p.phase(k2) == 0.0);  // 1/3 + 2/3 = 1
  CHECK(p.phase(k3) == doctest::Approx(1.0 / 3));  // 1 + 10/3
  const std::vector<double> half{0.5};
  const std::vector<std::int64_t> one{1};
  CHECK(TorusPoint::from_reals(half).phase(one) == -0.5);
}

TEST_CASE("phase stays exact for large frequencies") {
  const std::vector<double> xs{0.1234567890123};
  const TorusPoint p = TorusPoint::lift(xs);
  const std::vector<std::int64_t> k{1'000'000'007};
  // Exact residue arithmetic: (r * k mod q) / q.
  const unsigned __int128 q = TorusPoint::kOrbitModulus;
  const unsigned __int128 r = (static_cast<unsigned __int128>(p.residues()[0]) * 1'000'000'007ULL) % q;
  double expected = static_cast<double>(static_cast<long double>(static_cast<std::uint64_t>(r)) /
                                        static_cast<long double>(TorusPoint::kOrbitModulus));
  if (expected >= 0.5) expected -= 1.0;
  CHECK(p.phase(k) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("endomorphism matches big-integer residue arithmetic") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(0, 9);
  std::uniform_int_distribution<std::uint64_t> residue(0, TorusPoint::kOrbitModulus - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + trial % 4;
    IntMatrix a(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a(i, j) = entry(rng);
    std::vector<std::uint64_t> r(d);
    for (auto& x : r) x = residue(rng);
    const TorusPoint p = TorusPoint::from_residues(r, TorusPoint::kOrbitModulus);
    const TorusPoint image = ToralEndomorphism(a)(p);
    for (std::size_t i = 0; i < d; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += a(i, j) * BigInt(r[j]);
      CHECK(image.residues()[i] == static_cast<std::uint64_t>(acc % TorusPoint::kOrbitModulus));
    }

    // Dyadic points: arithmetic modulo 2^64.
    const TorusPoint dy = TorusPoint::from_residues(r, 0);
    const TorusPoint dimage = ToralEndomorphism(a)(dy);
    for (std::size_t i = 0; i < d; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += a(i, j) * BigInt(r[j]);
      CHECK(dimage.residues()[i] == static_cast<std::uint64_t>(acc % (BigInt(1) << 64)));
    }
  }
}

TEST_CASE("endomorphism agrees with floating point for a few steps") {
  const IntMatrix st{{3, 1, 0}, {1, 1, 1}, {0, 1, 0}};
  const std::vector<double> xi{0.137, 0.52, 0.901};
  TorusPoint p = TorusPoint::lift(xi);
  std::vector<double> f = xi;
  const ToralEndomorphism e(st);
  for (int n = 0; n < 5; ++n) {
    p = e(p);
    f = oracle::torus_map(st, f);
    for (std::size_t j = 0; j < 3; ++j) {
      const double diff = std::abs(p.coordinate(j) - f[j]);
      CHECK(std::min(diff, 1 - diff) < 1e-9);
    }
  }
  CHECK(e.iterate(TorusPoint::lift(xi), 5) == p);
}

TEST_CASE("rational points have finite orbits") {
  const IntMatrix st{{1, 1}, {1, 0}};
  const std::vector<std::int64_t> num{1, 1};
  const TorusPoint start = TorusPoint::from_rational(num, 5);
  const ToralEndomorphism e(st);
  TorusPoint p = start;
  int period = 0;
  do {
    p = e(p);
    ++period;
  } while (!(p == start) && period < 100);
  CHECK(period == 20);  // Pisano period of 5
  CHECK(TorusPoint::zero(3).coordinates() == std::vector<double>{0, 0, 0});
}

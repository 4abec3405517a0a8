#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "subcocycle/cocycle.hpp"
#include "subcocycle/error.hpp"

using namespace subcocycle;

namespace {

ComplexMatrix at(const TrigMatrix& m, const std::vector<double>& xi) { return evaluate(m, std::span<const double>(xi)); }

}  // namespace

TEST_CASE("M(0) is the transposed substitution matrix") {
  for (const auto& [name, text] : oracle::battery()) {
    const Substitution s = parse_substitution(text);
    const TrigMatrix m = build_cocycle_matrix(s);
    const IntMatrix st = substitution_matrix(s).transpose();
    for (std::size_t b = 0; b < s.alphabet_size(); ++b)
      for (std::size_t c = 0; c < s.alphabet_size(); ++c) CHECK(m(b, c).coefficient_sum() == st(b, c));
    const ComplexMatrix zero = evaluate(m, TorusPoint::zero(s.alphabet_size()));
    for (std::size_t b = 0; b < s.alphabet_size(); ++b)
      for (std::size_t c = 0; c < s.alphabet_size(); ++c) {
        CHECK(zero(b, c).real() == static_cast<double>(st(b, c)));
        CHECK(zero(b, c).imag() == 0.0);
      }
  }
}

TEST_CASE("cocycle matrix of zeta_3 by hand") {
  // 0 -> 0001: column 0 gets 1 + z0 + z0^2, column 1 gets z0^3.
  // 1 -> 012: 1, z0, z0 z1.  2 -> 1: 1 in column 1.
  const TrigMatrix m = build_cocycle_matrix(parse_substitution(oracle::zeta_m_text(3)));
  CHECK(m(0, 0).coefficient({0, 0, 0}) == 1);
  CHECK(m(0, 0).coefficient({1, 0, 0}) == 1);
  CHECK(m(0, 0).coefficient({2, 0, 0}) == 1);
  CHECK(m(0, 1).coefficient({3, 0, 0}) == 1);
  CHECK(m(0, 2).is_zero());
  CHECK(m(1, 2).coefficient({1, 1, 0}) == 1);
  CHECK(m(2, 1).coefficient({0, 0, 0}) == 1);
  CHECK(m(2, 0).is_zero());
}

TEST_CASE("evaluation matches the definition") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const auto images = oracle::random_images(rng, 1 + trial % 4, 6);
    const Substitution s(images);
    const SpectralCocycle cocycle(s);
    const auto xi = oracle::random_point(rng, images.size());
    CHECK((at(cocycle.matrix(), xi) - oracle::naive_cocycle(images, xi)).norm() < 1e-12);
    CHECK((cocycle.evaluate(TorusPoint::from_reals(xi)) - oracle::naive_cocycle(images, xi)).norm() < 1e-12);
  }
}

TEST_CASE("composition identity for random pairs") {
  // M_{a o b}(xi) = M_b(S_a^t xi) M_a(xi)
  std::mt19937_64 rng(31);
  double worst = 0;
  for (int pair = 0; pair < 20; ++pair) {
    const std::size_t d = 1 + pair % 4;
    const auto ia = oracle::random_images(rng, d, 4);
    const auto ib = oracle::random_images(rng, d, 4);
    const Substitution a(ia), b(ib);
    const TrigMatrix mab = build_cocycle_matrix(compose(a, b));
    const IntMatrix sat = substitution_matrix(a).transpose();
    for (int i = 0; i < 100; ++i) {
      const auto xi = oracle::random_point(rng, d);
      const ComplexMatrix rhs = oracle::naive_cocycle(ib, oracle::torus_map(sat, xi)) * oracle::naive_cocycle(ia, xi);
      worst = std::max(worst, (at(mab, xi) - rhs).norm());
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("products along the orbit equal the cocycle of the power") {
  std::mt19937_64 rng(37);
  for (const auto& [name, text] : oracle::battery()) {
    const Substitution s = parse_substitution(text);
    const SpectralCocycle cocycle(s);
    for (unsigned n = 1; n <= 3; ++n) {
      const TrigMatrix mn = build_cocycle_matrix(power(s, n));
      for (int i = 0; i < 10; ++i) {
        const auto xi = oracle::random_point(rng, s.alphabet_size());
        const TorusPoint p = TorusPoint::lift(xi);
        const ComplexMatrix direct = evaluate(mn, p);
        const ComplexMatrix product = cocycle.product(p, n);
        CHECK((product - direct).norm() / std::max(1.0, direct.norm()) < 1e-10);
        const RescaledProduct r = cocycle.rescaled_product(p, n);
        CHECK(std::abs(r.log_scale + std::log(r.unit.norm()) - std::log(direct.norm())) < 1e-10);
      }
    }
  }
}

TEST_CASE("Frobenius norm polynomial") {
  for (unsigned m : {3U, 7U, 12U}) {
    const TrigMatrix mm = build_cocycle_matrix(parse_substitution(oracle::zeta_m_text(m)));
    const TrigPoly q = frobenius_norm_sq_poly(mm);
    // |M|^2 has constant term equal to the number of unit terms: m + 1 + 3 + 1.
    CHECK(q.constant_term() == m + 5);
    std::mt19937_64 rng(m);
    const auto xi = oracle::random_point(rng, 3);
    const TorusPoint p = TorusPoint::from_reals(xi);
    CHECK(std::abs(q.evaluate(p).real() - std::pow(evaluate(mm, p).norm(), 2)) < 1e-9);
    CHECK(std::abs(q.evaluate(p).imag()) < 1e-9);
  }
}

TEST_CASE("matrix norms") {
  ComplexMatrix m(2, 2);
  m << 3, 0, 0, 4;
  CHECK(matrix_norm(m) == doctest::Approx(5.0));
  CHECK(matrix_norm(m, MatrixNorm::operator2) == doctest::Approx(4.0));
}

TEST_CASE("a vanishing product is reported") {
  // 0 -> 00: M(xi) = 1 + exp(-2 pi i xi) vanishes at xi = 1/2.
  const SpectralCocycle c(parse_substitution("0->00"));
  const std::vector<std::int64_t> half{1};
  const TorusPoint p = TorusPoint::from_rational(half, 2);
  CHECK(c.product(p, 1).norm() == 0.0);
  CHECK_THROWS_AS(c.rescaled_product(p, 1), NumericalError);
}

#pragma once

// Independent reference computations used by the tests. Everything here is
// written from the definitions, without calling the library routine that a
// test is checking.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "subcocycle/int_matrix.hpp"
#include "subcocycle/substitution.hpp"

namespace oracle {

using subcocycle::BigInt;
using subcocycle::IntMatrix;
using subcocycle::Substitution;
using subcocycle::Word;

struct Named {
  std::string name;
  std::string text;
};

inline std::string zeta_n_text(unsigned n) {
  auto pairs = [](unsigned r) {
    std::string s;
    for (unsigned i = 0; i < r; ++i) s += "12";
    return s;
  };
  return "0->03;1->03113;2->03" + pairs(n + 1) + "13;3->03" + pairs(n) + "13";
}

inline std::string zeta_m_text(unsigned m) { return "0->" + std::string(m, '0') + "1;1->012;2->1"; }

/// Fibonacci, zeta_3, zeta_12, the four-interval family at n = 1 and 3, and
/// the two-letter example 0 -> 0001, 1 -> 0000111111.
inline std::vector<Named> battery() {
  return {{"fibonacci", "0->01;1->0"},
          {"zeta_3", zeta_m_text(3)},
          {"zeta_12", zeta_m_text(12)},
          {"zeta^(1)", zeta_n_text(1)},
          {"zeta^(3)", zeta_n_text(3)},
          {"two_integer_eigenvalues", "0->0001;1->0000111111"}};
}

inline IntMatrix count_matrix(const std::vector<Word>& images) {
  const std::size_t d = images.size();
  IntMatrix m(d);
  for (std::size_t j = 0; j < d; ++j)
    for (auto letter : images[j]) m(letter, j) += 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t d = a.dimension();
  IntMatrix c(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

/// Leibniz expansion over all permutations.
inline BigInt leibniz_det(const IntMatrix& a) {
  const std::size_t d = a.dimension();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < d; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(xI - A) at an integer x.
inline BigInt char_poly_at(const IntMatrix& a, long long x) {
  IntMatrix m(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) m(i, j) = (i == j ? BigInt(x) : BigInt(0)) - a(i, j);
  return leibniz_det(m);
}

/// Some power up to 2 d^2 is strictly positive (a generous exponent).
inline bool primitive_by_powers(const IntMatrix& a) {
  const std::size_t d = a.dimension();
  IntMatrix b(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) b(i, j) = a(i, j) != 0 ? 1 : 0;
  IntMatrix p = b;
  for (std::size_t n = 1; n <= 2 * d * d + 2; ++n) {
    bool positive = true;
    for (std::size_t i = 0; i < d && positive; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (p(i, j) == 0) {
          positive = false;
          break;
        }
    if (positive) return true;
    p = multiply(p, b);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p(i, j) = p(i, j) != 0 ? 1 : 0;
  }
  return false;
}

/// Image of a letter under the n-th power, by repeated letter replacement.
inline Word iterate_image(const std::vector<Word>& images, std::uint32_t letter, unsigned n) {
  Word w{letter};
  for (unsigned i = 0; i < n; ++i) {
    Word next;
    for (auto c : w) next.insert(next.end(), images[c].begin(), images[c].end());
    w = std::move(next);
  }
  return w;
}

/// Cocycle matrix from the definition: entry (b, c) sums exp(-2 pi i <prefix counts, xi>)
/// over the occurrences of c in the image of b.
inline Eigen::MatrixXcd naive_cocycle(const std::vector<Word>& images, const std::vector<double>& xi) {
  const std::size_t d = images.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t b = 0; b < d; ++b) {
    double phase = 0;
    for (auto c : images[b]) {
      m(b, c) += std::polar(1.0, -2 * std::numbers::pi * phase);
      phase += xi[c];
    }
  }
  return m;
}

/// xi -> A xi mod 1 in floating point.
inline std::vector<double> torus_map(const IntMatrix& a, const std::vector<double>& xi) {
  std::vector<double> out(xi.size(), 0.0);
  for (std::size_t i = 0; i < xi.size(); ++i) {
    long double acc = 0;
    for (std::size_t j = 0; j < xi.size(); ++j) acc += static_cast<long double>(a(i, j)) * xi[j];
    out[i] = static_cast<double>(acc - std::floor(acc));
  }
  return out;
}

inline std::vector<Word> random_images(std::mt19937_64& rng, std::size_t d, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::uint32_t> letter(0, static_cast<std::uint32_t>(d - 1));
  std::vector<Word> images(d);
  for (auto& w : images) {
    w.resize(len(rng));
    for (auto& c : w) c = letter(rng);
  }
  return images;
}

inline std::vector<double> random_point(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xi(d);
  for (auto& x : xi) x = u(rng);
  return xi;
}

/// Roots of a z^2 + b z + c by the quadratic formula.
inline std::vector<std::complex<double>> quadratic_roots(double a, double b, double c) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4 * a * c));
  return {(-b + disc) / (2 * a), (-b - disc) / (2 * a)};
}

}  // namespace oracle

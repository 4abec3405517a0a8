#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "subcocycle/int_matrix.hpp"
#include "subcocycle/substitution.hpp"

namespace subcocycle {

/// Permutation of {1, ..., d} in one-line form (Veech convention: after the
/// exchange, interval j sits in place pi(j)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<unsigned> one_line);

  std::size_t size() const noexcept { return values_.size(); }
  /// pi(i) for 1-based i.
  unsigned operator()(unsigned i) const { return values_.at(i - 1); }
  const std::vector<unsigned>& one_line() const noexcept { return values_; }
  Permutation inverse() const;
  /// pi{1..k} != {1..k} for every k < d.
  bool is_irreducible() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> values_;
};

/// Accepts "4321" or "4,3,2,1" (optionally parenthesized).
Permutation parse_permutation(std::string_view text);
/// Digits run together for d <= 9, comma-separated otherwise.
std::string to_string(const Permutation& pi);

/// Interval exchange with positive lengths and an irreducible permutation.
class Iet {
 public:
  Iet(std::vector<double> lengths, Permutation pi);

  const std::vector<double>& lengths() const noexcept { return lengths_; }
  const Permutation& permutation() const noexcept { return pi_; }
  double total_length() const noexcept { return total_; }
  Iet normalized() const;

  /// x + sum_{pi(j) < pi(i)} lambda_j - sum_{j < i} lambda_j for x in I_i.
  double apply(double x) const;

 private:
  std::vector<double> lengths_;
  Permutation pi_;
  double total_ = 0.0;
};

enum class RauzyMove { a, b };

char to_char(RauzyMove move);

/// Rauzy successor of an irreducible permutation.
Permutation rauzy_move_permutation(const Permutation& pi, RauzyMove move);

/// Substitution of a single move on letters 0..d-1 (letter i stands for interval i+1).
Substitution rauzy_substitution(const Permutation& pi, RauzyMove move);

struct RauzyLoop {
  Permutation base;
  std::vector<RauzyMove> moves;
};

struct LoopResult {
  std::vector<Permutation> path;  // base, then the permutation after each move
  Substitution substitution;      // first move outermost
  IntMatrix matrix;
};

/// Composes the move substitutions along a closed walk. Throws
/// std::invalid_argument for an empty move list or a walk that does not
/// return to its base.
LoopResult loop_substitution(const RauzyLoop& loop);

/// `base=4321 moves=b,a,a,b,a*n,b,a,a,a n=3`; `*` repeats a move a fixed or
/// `n` times. Throws ParseError.
RauzyLoop parse_loop_spec(std::string_view text);

/// b, a, a, b, a^n, b, a, a, a from (4321).
RauzyLoop family_loop(unsigned n);

/// 1 -> 14, 2 -> 14224, 3 -> 14(23)^(n+1)24, 4 -> 14(23)^n 24 on letters 0..3.
Substitution family_zeta_n(unsigned n);

/// 0 -> 0^m 1, 1 -> 012, 2 -> 1.
Substitution family_zeta_m(unsigned m);

struct RauzyEdge {
  Permutation from;
  Permutation to;
  RauzyMove move;
};

struct RauzyDiagram {
  std::vector<Permutation> vertices;  // breadth-first order from the base
  std::vector<RauzyEdge> edges;
};

/// Breadth-first walk over both moves up to `depth` steps from `base`.
RauzyDiagram enumerate_component(const Permutation& base, unsigned depth);

/// Substitution of a self-similar IET read off from first-return words.
/// Not implemented: loops of Rauzy moves cover the supported cases.
Substitution self_similar_substitution(const Iet& f);

}  // namespace subcocycle

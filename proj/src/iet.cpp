#include "subcocycle/iet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "subcocycle/error.hpp"

namespace subcocycle {

Permutation::Permutation(std::vector<unsigned> one_line) : values_(std::move(one_line)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (unsigned v : values_) {
    if (v < 1 || v > values_.size() || seen[v]) throw std::invalid_argument("Permutation: not a permutation of 1..d");
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<unsigned>(i + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_irreducible() const {
  if (values_.empty()) return false;
  unsigned running_max = 0;
  for (std::size_t k = 0; k + 1 < values_.size(); ++k) {
    running_max = std::max(running_max, values_[k]);
    if (running_max == k + 1) return false;
  }
  return true;
}

Permutation parse_permutation(std::string_view text) {
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') body += c;
  std::vector<unsigned> values;
  try {
    if (body.find(',') != std::string::npos) {
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        values.push_back(static_cast<unsigned>(std::stoul(item, &used)));
        if (used != item.size()) throw std::invalid_argument(item);
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument(body);
        values.push_back(static_cast<unsigned>(c - '0'));
      }
    }
    if (values.empty()) throw std::invalid_argument(body);
    return Permutation(std::move(values));
  } catch (const std::exception&) {
    throw ParseError("invalid permutation '" + std::string(text) + "'", 1, 1);
  }
}

std::string to_string(const Permutation& pi) {
  std::string out;
  const bool compact = pi.size() <= 9;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(pi.one_line()[i]);
  }
  return out;
}

Iet::Iet(std::vector<double> lengths, Permutation pi) : lengths_(std::move(lengths)), pi_(std::move(pi)) {
  if (lengths_.size() != pi_.size()) throw std::invalid_argument("Iet: lengths and permutation sizes differ");
  if (!pi_.is_irreducible()) throw std::invalid_argument("Iet: permutation is not irreducible");
  for (double l : lengths_) {
    if (!(l > 0) || !std::isfinite(l)) throw std::invalid_argument("Iet: lengths must be positive");
    total_ += l;
  }
}

Iet Iet::normalized() const {
  std::vector<double> l = lengths_;
  for (double& x : l) x /= total_;
  return Iet(std::move(l), pi_);
}

double Iet::apply(double x) const {
  if (!(x >= 0 && x < total_)) throw std::out_of_range("Iet::apply: x is outside [0, total length)");
  const std::size_t d = lengths_.size();
  double left = 0;
  std::size_t i = 0;
  while (i + 1 < d && x >= left + lengths_[i]) left += lengths_[i++];
  double target = 0;
  for (std::size_t j = 0; j < d; ++j)
    if (pi_.one_line()[j] < pi_.one_line()[i]) target += lengths_[j];
  return x - left + target;
}

char to_char(RauzyMove move) { return move == RauzyMove::a ? 'a' : 'b'; }

namespace {

void require_irreducible(const Permutation& pi) {
  if (!pi.is_irreducible()) throw std::invalid_argument("Rauzy move: permutation is not irreducible");
}

}  // namespace

// The bottom row lists the intervals in their order after the exchange,
// i.e. the one-line form of pi^-1; j = pi^-1(d) is its last entry.
Permutation rauzy_move_permutation(const Permutation& pi, RauzyMove move) {
  require_irreducible(pi);
  const unsigned d = static_cast<unsigned>(pi.size());
  std::vector<unsigned> bottom = pi.inverse().one_line();
  const unsigned j = bottom.back();
  if (move == RauzyMove::b) {
    bottom.pop_back();
    const auto at = std::find(bottom.begin(), bottom.end(), d);
    bottom.insert(at + 1, j);
  } else {
    // The top row becomes 1..j, d, j+1..d-1; relabel it back to 1..d.
    for (unsigned& v : bottom) {
      if (v == d)
        v = j + 1;
      else if (v > j)
        v = v + 1;
    }
  }
  return Permutation(std::move(bottom)).inverse();
}

Substitution rauzy_substitution(const Permutation& pi, RauzyMove move) {
  require_irreducible(pi);
  const unsigned d = static_cast<unsigned>(pi.size());
  const unsigned j = pi.inverse()(d);
  std::vector<Word> images(d);
  for (unsigned i = 1; i <= d; ++i) images[i - 1] = {i - 1};
  if (move == RauzyMove::b) {
    images[j - 1] = {j - 1, d - 1};
  } else {
    images[j] = {j - 1, d - 1};
    for (unsigned i = j + 2; i <= d; ++i) images[i - 1] = {i - 2};
  }
  return Substitution(std::move(images));
}

LoopResult loop_substitution(const RauzyLoop& loop) {
  if (loop.moves.empty()) throw std::invalid_argument("loop_substitution: empty move sequence");
  std::vector<Permutation> path{loop.base};
  Substitution composed = Substitution::identity(loop.base.size());
  for (RauzyMove move : loop.moves) {
    const Permutation here = path.back();
    composed = compose(composed, rauzy_substitution(here, move));
    path.push_back(rauzy_move_permutation(here, move));
  }
  if (path.back() != loop.base)
    throw std::invalid_argument("loop_substitution: open path ends at (" + to_string(path.back()) +
                                ") instead of (" + to_string(loop.base) + ")");
  IntMatrix matrix = substitution_matrix(composed);
  return LoopResult{std::move(path), std::move(composed), std::move(matrix)};
}

RauzyLoop parse_loop_spec(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>> fields;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string token(text.substr(start, pos - start));
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + token + "'", 1, start + 1);
    const std::string key = token.substr(0, eq);
    if (key != "base" && key != "moves" && key != "n") throw ParseError("unknown key '" + key + "'", 1, start + 1);
    if (fields.count(key)) throw ParseError("duplicate key '" + key + "'", 1, start + 1);
    fields[key] = {token.substr(eq + 1), start + eq + 2};
  }
  if (!fields.count("base")) throw ParseError("missing base=", 1, text.size() + 1);
  if (!fields.count("moves")) throw ParseError("missing moves=", 1, text.size() + 1);

  std::optional<unsigned> n;
  if (fields.count("n")) {
    const auto& [value, column] = fields["n"];
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(c); }))
      throw ParseError("n must be a nonnegative integer", 1, column);
    n = static_cast<unsigned>(std::stoul(value));
  }

  RauzyLoop loop;
  try {
    loop.base = parse_permutation(fields["base"].first);
  } catch (const ParseError&) {
    throw ParseError("invalid base permutation", 1, fields["base"].second);
  }

  const auto& [moves, moves_column] = fields["moves"];
  std::size_t offset = 0;
  while (offset <= moves.size()) {
    std::size_t comma = moves.find(',', offset);
    if (comma == std::string::npos) comma = moves.size();
    const std::string item = moves.substr(offset, comma - offset);
    const std::size_t column = moves_column + offset;
    if (item.empty() || (item[0] != 'a' && item[0] != 'b')) throw ParseError("expected move a or b", 1, column);
    const RauzyMove move = item[0] == 'a' ? RauzyMove::a : RauzyMove::b;
    unsigned repeat = 1;
    if (item.size() > 1) {
      if (item[1] != '*' || item.size() == 2) throw ParseError("expected a*count or a*n", 1, column + 1);
      const std::string count = item.substr(2);
      if (count == "n") {
        if (!n) throw ParseError("'*n' used without n=", 1, column + 2);
        repeat = *n;
      } else if (std::all_of(count.begin(), count.end(), [](char c) { return std::isdigit(c); })) {
        repeat = static_cast<unsigned>(std::stoul(count));
      } else {
        throw ParseError("invalid repeat count '" + count + "'", 1, column + 2);
      }
    }
    loop.moves.insert(loop.moves.end(), repeat, move);
    offset = comma + 1;
  }
  return loop;
}

RauzyLoop family_loop(unsigned n) {
  if (n == 0) throw std::invalid_argument("family_loop: n must be at least 1");
  using M = RauzyMove;
  RauzyLoop loop{Permutation({4, 3, 2, 1}), {M::b, M::a, M::a, M::b}};
  loop.moves.insert(loop.moves.end(), n, M::a);
  for (M m : {M::b, M::a, M::a, M::a}) loop.moves.push_back(m);
  return loop;
}

Substitution family_zeta_n(unsigned n) {
  if (n == 0) throw std::invalid_argument("family_zeta_n: n must be at least 1");
  auto tail = [](unsigned repeats) {
    Word w{0, 3};
    for (unsigned i = 0; i < repeats; ++i) w.insert(w.end(), {1, 2});
    w.insert(w.end(), {1, 3});
    return w;
  };
  return Substitution({{0, 3}, {0, 3, 1, 1, 3}, tail(n + 1), tail(n)});
}

Substitution family_zeta_m(unsigned m) {
  if (m < 2) throw std::invalid_argument("family_zeta_m: m must be at least 2");
  Word first(m, 0);
  first.push_back(1);
  return Substitution({first, {0, 1, 2}, {1}});
}

RauzyDiagram enumerate_component(const Permutation& base, unsigned depth) {
  require_irreducible(base);
  RauzyDiagram out;
  std::set<Permutation> seen{base};
  std::deque<std::pair<Permutation, unsigned>> queue{{base, 0}};
  out.vertices.push_back(base);
  while (!queue.empty()) {
    auto [pi, level] = queue.front();
    queue.pop_front();
    if (level == depth) continue;
    for (RauzyMove move : {RauzyMove::a, RauzyMove::b}) {
      Permutation next = rauzy_move_permutation(pi, move);
      out.edges.push_back({pi, next, move});
      if (seen.insert(next).second) {
        out.vertices.push_back(next);
        queue.emplace_back(next, level + 1);
      }
    }
  }
  return out;
}

Substitution self_similar_substitution(const Iet&) {
  throw NotImplementedError("self_similar_substitution: first-return coding is not implemented; use a Rauzy loop");
}

}  // namespace subcocycle

#include "subcocycle/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <utility>

#include "subcocycle/error.hpp"

namespace subcocycle {

namespace {

constexpr std::string_view kSymbols =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

struct Located {
  char ch;
  std::size_t line;
  std::size_t column;
};

using Token = std::vector<Located>;

struct RawRule {
  Token lhs;
  Token rhs;
  std::size_t line;
  std::size_t column;
};

std::string text_of(const Token& tok) {
  std::string s;
  for (const auto& c : tok) s.push_back(c.ch);
  return s;
}

[[noreturn]] void fail(const std::string& what, std::size_t line, std::size_t column) {
  throw ParseError(what, line, column);
}

std::vector<RawRule> split_rules(std::string_view text) {
  std::vector<RawRule> rules;
  Token current;
  std::size_t line = 1, column = 1;
  bool in_comment = false;

  auto flush = [&] {
    if (current.empty()) return;
    auto arrow = std::adjacent_find(current.begin(), current.end(), [](const Located& a, const Located& b) {
      return a.ch == '-' && b.ch == '>';
    });
    if (arrow == current.end()) fail("expected '->' in rule", current.front().line, current.front().column);
    RawRule rule{Token(current.begin(), arrow), Token(arrow + 2, current.end()), current.front().line,
                 current.front().column};
    if (rule.lhs.empty()) fail("missing letter before '->'", arrow->line, arrow->column);
    rules.push_back(std::move(rule));
    current.clear();
  };

  for (char ch : text) {
    if (ch == '\n') {
      in_comment = false;
      flush();
      ++line;
      column = 1;
      continue;
    }
    if (!in_comment) {
      if (ch == '#') {
        in_comment = true;
      } else if (ch == ';') {
        flush();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        current.push_back({ch, line, column});
      }
    }
    ++column;
  }
  flush();
  return rules;
}

Letter symbol_value(const Located& c) {
  const auto pos = kSymbols.find(c.ch);
  if (pos == std::string_view::npos)
    fail(std::string("letter out of range: '") + c.ch + "'", c.line, c.column);
  return static_cast<Letter>(pos);
}

Letter decimal_value(const Token& tok, std::size_t line, std::size_t column) {
  if (tok.empty()) fail("empty letter in comma-separated word", line, column);
  unsigned long long v = 0;
  for (const auto& c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c.ch)))
      fail(std::string("letter out of range: '") + c.ch + "'", c.line, c.column);
    v = v * 10 + static_cast<unsigned>(c.ch - '0');
    if (v > 0xFFFFFFFFull) fail("letter out of range", tok.front().line, tok.front().column);
  }
  return static_cast<Letter>(v);
}

}  // namespace

Substitution::Substitution(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("Substitution: alphabet must be nonempty");
  const auto d = images_.size();
  for (std::size_t j = 0; j < d; ++j) {
    if (images_[j].empty())
      throw std::invalid_argument("Substitution: empty image for letter " + std::to_string(j));
    for (Letter l : images_[j])
      if (l >= d)
        throw std::invalid_argument("Substitution: letter " + std::to_string(l) + " out of range in image of " +
                                    std::to_string(j));
  }
}

Substitution Substitution::identity(std::size_t alphabet_size) {
  std::vector<Word> images(alphabet_size);
  for (std::size_t j = 0; j < alphabet_size; ++j) images[j] = {static_cast<Letter>(j)};
  return Substitution(std::move(images));
}

std::vector<std::size_t> Substitution::image_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(images_.size());
  for (const auto& w : images_) out.push_back(w.size());
  return out;
}

Word Substitution::apply(const Word& word) const {
  Word out;
  for (Letter l : word) {
    const Word& img = images_.at(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Substitution parse_substitution(std::string_view text) {
  const auto rules = split_rules(text);
  if (rules.empty()) throw ParseError("no rules found", 1, 1);

  bool integer_mode = false;
  for (const auto& r : rules) {
    if (r.lhs.size() > 1) integer_mode = true;
    for (const auto& c : r.rhs)
      if (c.ch == ',') integer_mode = true;
  }

  struct Parsed {
    Letter lhs;
    Word rhs;
    std::size_t line, column;
  };
  std::vector<Parsed> parsed;
  Letter max_letter = 0;

  for (const auto& r : rules) {
    Parsed p{0, {}, r.line, r.column};
    if (integer_mode) {
      p.lhs = decimal_value(r.lhs, r.line, r.column);
      Token piece;
      std::size_t piece_line = r.line, piece_col = r.column;
      for (std::size_t i = 0; i <= r.rhs.size(); ++i) {
        if (i == r.rhs.size() || r.rhs[i].ch == ',') {
          if (i == r.rhs.size() && piece.empty() && p.rhs.empty()) break;
          p.rhs.push_back(decimal_value(piece, piece_line, piece_col));
          piece.clear();
          if (i < r.rhs.size()) {
            piece_line = r.rhs[i].line;
            piece_col = r.rhs[i].column + 1;
          }
        } else {
          piece.push_back(r.rhs[i]);
        }
      }
    } else {
      p.lhs = symbol_value(r.lhs.front());
      for (const auto& c : r.rhs) p.rhs.push_back(symbol_value(c));
    }
    if (p.rhs.empty()) fail("empty image for letter '" + text_of(r.lhs) + "'", r.line, r.column);
    max_letter = std::max(max_letter, p.lhs);
    for (Letter l : p.rhs) max_letter = std::max(max_letter, l);
    parsed.push_back(std::move(p));
  }

  const std::size_t d = static_cast<std::size_t>(max_letter) + 1;
  std::vector<std::optional<Word>> images(d);
  for (auto& p : parsed) {
    if (images[p.lhs]) fail("duplicate rule for letter " + std::to_string(p.lhs), p.line, p.column);
    images[p.lhs] = std::move(p.rhs);
  }
  std::vector<Word> out;
  out.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (!images[j]) {
      const auto& last = parsed.back();
      fail("missing rule for letter " + std::to_string(j), last.line, last.column);
    }
    out.push_back(std::move(*images[j]));
  }
  return Substitution(std::move(out));
}

std::string to_string(const Substitution& sub, unsigned letter_offset) {
  const std::size_t top = sub.alphabet_size() - 1 + letter_offset;
  const bool chars = top < kSymbols.size();
  std::string out;
  for (std::size_t j = 0; j < sub.alphabet_size(); ++j) {
    if (j) out += chars ? ";" : "; ";
    auto emit = [&](std::size_t letter) {
      if (chars)
        out.push_back(kSymbols[letter + letter_offset]);
      else
        out += std::to_string(letter + letter_offset);
    };
    emit(j);
    out += "->";
    const auto& img = sub.image(static_cast<Letter>(j));
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (!chars && i) out.push_back(',');
      emit(img[i]);
    }
  }
  return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (outer.alphabet_size() != inner.alphabet_size())
    throw std::invalid_argument("compose: alphabet mismatch");
  std::vector<Word> images;
  images.reserve(inner.alphabet_size());
  for (const auto& w : inner.images()) images.push_back(outer.apply(w));
  return Substitution(std::move(images));
}

Substitution power(const Substitution& sub, unsigned n) {
  if (n == 0) throw std::invalid_argument("power: exponent must be at least 1");
  Substitution result = sub;
  for (unsigned i = 1; i < n; ++i) result = compose(sub, result);
  return result;
}

IntMatrix substitution_matrix(const Substitution& sub) {
  const auto d = sub.alphabet_size();
  IntMatrix m(d);
  for (std::size_t j = 0; j < d; ++j)
    for (Letter i : sub.image(static_cast<Letter>(j))) m(i, j) += 1;
  return m;
}

bool is_primitive(const IntMatrix& m) {
  const std::size_t d = m.dimension();
  if (d == 0 || !m.is_nonnegative()) return false;
  using Bool = std::vector<char>;
  auto mul = [d](const Bool& a, const Bool& b) {
    Bool c(d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (a[i * d + k])
          for (std::size_t j = 0; j < d; ++j)
            if (b[k * d + j]) c[i * d + j] = 1;
    return c;
  };
  Bool base(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) base[i * d + j] = m(i, j) > 0 ? 1 : 0;
  // A primitive matrix has a positive power at the Wielandt exponent.
  std::size_t exponent = (d - 1) * (d - 1) + 1;
  Bool result;
  bool have = false;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = have ? mul(result, base) : base;
      have = true;
    }
    exponent >>= 1U;
    if (exponent) base = mul(base, base);
  }
  return std::all_of(result.begin(), result.end(), [](char c) { return c != 0; });
}

bool is_primitive(const Substitution& sub) { return is_primitive(substitution_matrix(sub)); }

bool is_constant_length(const Substitution& sub) {
  const auto lengths = sub.image_lengths();
  return std::adjacent_find(lengths.begin(), lengths.end(), std::not_equal_to<>()) == lengths.end();
}

}  // namespace subcocycle

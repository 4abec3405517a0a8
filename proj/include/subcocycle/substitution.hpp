#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subcocycle/int_matrix.hpp"

namespace subcocycle {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// A substitution on the alphabet {0, ..., d-1}: letter j maps to images()[j].
///
/// Every image is nonempty and uses only letters below d. Values are
/// immutable once constructed.
class Substitution {
 public:
  explicit Substitution(std::vector<Word> images);

  static Substitution identity(std::size_t alphabet_size);

  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Word& image(Letter letter) const { return images_.at(letter); }
  const std::vector<Word>& images() const noexcept { return images_; }
  std::vector<std::size_t> image_lengths() const;

  /// Image of a word under the substitution (concatenation of letter images).
  Word apply(const Word& word) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Word> images_;
};

/// Parses `a -> w ; b -> w ...` (rules split by `;` or newlines, `#` comments).
///
/// Letters are single characters from 0-9a-zA-Z (valued 0..61 in that
/// order) unless any rule uses commas or a multi-character left side, in
/// which case every letter is a comma-separated decimal integer. The
/// alphabet is the largest letter plus one, and each letter needs exactly
/// one rule. Throws ParseError with the position of the offending token.
Substitution parse_substitution(std::string_view text);

/// Canonical text form, letters in increasing order. `letter_offset` shifts
/// printed letters (1 for the 1-based convention of Rauzy-induction output).
std::string to_string(const Substitution& sub, unsigned letter_offset = 0);

/// (outer ∘ inner)(a) = outer(inner(a)).
Substitution compose(const Substitution& outer, const Substitution& inner);

/// n-fold composition; n = 0 is rejected.
Substitution power(const Substitution& sub, unsigned n);

/// S(i, j) = number of occurrences of letter i in the image of j.
IntMatrix substitution_matrix(const Substitution& sub);

/// True iff some power of the nonnegative matrix is entrywise positive
/// (searched up to the Wielandt bound (d-1)^2 + 1).
bool is_primitive(const IntMatrix& m);
bool is_primitive(const Substitution& sub);

bool is_constant_length(const Substitution& sub);

}  // namespace subcocycle

#pragma once

// Text syntax for words.
//
//   lowercase letter   a generator (by default a..z are generators 1..26)
//   uppercase letter   its inverse; `A` is the same as `a^-1`
//   ^k                 k-fold repetition of the preceding letter, k < 0 inverts
//   1                  the identity (contributes no letters)
//
// Whitespace is ignored. Example: `caB^2` is c a b⁻¹ b⁻¹.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fbc/word.hpp"

namespace fbc {

/// Maps single-letter generator names to generator indices.
class Alphabet {
 public:
  /// a, b, c, ... for generators 1..rank. rank must be at most 26.
  static Alphabet standard(int rank);
  /// Generator i+1 is named names[i]; each name a distinct lowercase letter.
  explicit Alphabet(std::vector<char> names);

  int rank() const { return static_cast<int>(names_.size()); }
  char name(int gen) const { return names_[static_cast<std::size_t>(gen - 1)]; }
  /// 0 when `c` is not a generator name (case-insensitive).
  int index_of(char c) const;

 private:
  std::vector<char> names_;
  std::array<int, 26> index_{};
};

/// Parses the whole of `text`. Errors carry 1-based line and column.
Word parse_word(std::string_view text, const Alphabet& alphabet);
inline Word parse_word(std::string_view text, int rank) {
  return parse_word(text, Alphabet::standard(rank));
}

/// Parses text[begin, end) of a larger document so that error positions
/// refer to the document.
Word parse_word_in(std::string_view document, std::size_t begin, std::size_t end,
                   const Alphabet& alphabet);

/// Letters only (no exponents); the identity prints as `1`.
std::string format_word(const Word& w, const Alphabet& alphabet);
std::string format_word(const Word& w);

/// 1-based line and column of `offset` in `text`.
struct TextPosition {
  std::size_t line;
  std::size_t column;
};
TextPosition locate(std::string_view text, std::size_t offset);

}  // namespace fbc

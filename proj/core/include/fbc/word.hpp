#pragma once

// Words in a free group of finite rank.
//
// Generators are numbered 1..rank. A Letter is a generator with a sign; a
// Word is always freely reduced, which is enforced at construction.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

namespace fbc {

inline constexpr std::size_t kDefaultLetterCap = 10'000'000;

class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int gen, int sign) : value_(sign < 0 ? -gen : gen) {}

  /// Letter from a signed index: +g is the generator g, -g its inverse.
  static constexpr Letter from_signed(int value) {
    Letter l;
    l.value_ = value;
    return l;
  }

  constexpr int gen() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr bool positive() const { return value_ > 0; }
  constexpr int value() const { return value_; }
  constexpr Letter inverse() const { return from_signed(-value_); }

  // Total order: generator ascending, positive before negative.
  constexpr int order_key() const { return 2 * gen() + (value_ < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.order_key() <=> b.order_key();
  }

 private:
  std::int32_t value_ = 1;
};

class Word;
class FreeMap;

/// Accumulates letters with on-the-fly free cancellation.
class ReducingBuffer {
 public:
  explicit ReducingBuffer(int rank, std::size_t cap = kDefaultLetterCap);

  void push(Letter l);
  void append(std::span<const Letter> letters);
  /// Appends the inverse of `letters` (reversed, each letter inverted).
  void append_inverse(std::span<const Letter> letters);
  /// Same for words already known to be reduced: only the junction can cancel.
  inline void append(const Word& w);
  inline void append_inverse(const Word& w);
  /// `letters` must be a freely reduced word over the buffer's alphabet.
  inline void append_reduced(std::span<const Letter> letters);

  std::size_t size() const { return letters_.size(); }
  void reserve(std::size_t n) { letters_.reserve(n); }

  Word take() &&;

 private:
  void check_capacity() const;
  [[noreturn]] void throw_rank_mismatch(int other) const;

  int rank_;
  std::size_t cap_;
  std::vector<Letter> letters_;
};

class Word {
 public:
  /// The identity of F_1.
  Word() = default;
  /// The identity of F_rank.
  explicit Word(int rank);

  /// Freely reduces `raw`. Throws InvalidLetter on out-of-range generators
  /// and CapacityExceeded when the reduced word would exceed `cap`.
  static Word reduce(int rank, std::span<const Letter> raw,
                     std::size_t cap = kDefaultLetterCap);
  static Word generator(int rank, int gen, int sign = 1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  Word power(std::int64_t k, std::size_t cap = kDefaultLetterCap) const;

  /// Sum of exponents of `gen` in this word.
  std::int64_t exponent_sum(int gen) const;
  /// Occurrences of `gen` with either sign.
  std::int64_t occurrences(int gen) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Rank, then shortlex under the letter order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  friend class ReducingBuffer;
  friend Word cyclic_core(const Word& w);
Word cyclic_core(Word&& w);
  friend Word cyclic_core(Word&& w);
  friend Word apply(const FreeMap& f, const Word& w, std::size_t cap);
  Word(int rank, std::vector<Letter> reduced)
      : rank_(rank), letters_(std::move(reduced)) {}

  int rank_ = 1;
  std::vector<Letter> letters_;
};

/// reduce(u · v). Throws RankMismatch on different ranks.
Word multiply(const Word& u, const Word& v, std::size_t cap = kDefaultLetterCap);
inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

/// w = conjugator · core · conjugator⁻¹ with core cyclically reduced.
inline void ReducingBuffer::append_reduced(std::span<const Letter> letters) {
  std::size_t i = 0;
  while (i < letters.size() && !letters_.empty() && letters_.back() == letters[i].inverse()) {
    letters_.pop_back();
    ++i;
  }
  for (; i < letters.size(); ++i) letters_.push_back(letters[i]);
  if (letters_.size() > cap_) check_capacity();
}

inline void ReducingBuffer::append(const Word& w) {
  if (w.rank() != rank_) throw_rank_mismatch(w.rank());
  append_reduced(w.letters());
}

inline void ReducingBuffer::append_inverse(const Word& w) {
  if (w.rank() != rank_) throw_rank_mismatch(w.rank());
  const auto letters = w.letters();
  std::size_t i = letters.size();
  while (i > 0 && !letters_.empty() && letters_.back() == letters[i - 1]) {
    letters_.pop_back();
    --i;
  }
  for (; i > 0; --i) letters_.push_back(letters[i - 1].inverse());
  if (letters_.size() > cap_) check_capacity();
}

struct CyclicDecomposition {
  Word core;
  Word conjugator;
};

CyclicDecomposition cyclic_reduce(const Word& w);

/// The cyclically reduced core alone; cheaper than cyclic_reduce.
Word cyclic_core(const Word& w);

/// Length of the cyclic core: the shortest length in the conjugacy class.
std::size_t cyclic_length(const Word& w);

/// Canonical representative of a conjugacy class: a cyclically reduced word
/// equal to its own lexicographically least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word to_word() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b);

 private:
  friend CyclicWord canonical_cyclic(const Word& w);
  friend CyclicWord canonical_cyclic_from_core(int rank, std::span<const Letter> core);

  int rank_ = 1;
  std::vector<Letter> letters_;
};

CyclicWord canonical_cyclic(const Word& w);
/// Same as canonical_cyclic, for letters already known to be cyclically
/// reduced. No validation beyond what the result type needs.
CyclicWord canonical_cyclic_from_core(int rank, std::span<const Letter> core);

/// Start index of the least rotation of `letters` (Booth's algorithm).
std::size_t least_rotation(std::span<const Letter> letters);

}  // namespace fbc

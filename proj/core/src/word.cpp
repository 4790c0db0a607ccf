#include "fbc/word.hpp"

#include <algorithm>
#include <string>

#include "fbc/error.hpp"

namespace fbc {

namespace {

void check_letter(int rank, Letter l) {
  if (l.value() == 0 || l.gen() > rank) {
    throw InvalidLetter("generator index " + std::to_string(l.gen()) +
                        " outside 1.." + std::to_string(rank));
  }
}

void check_rank(int rank) {
  if (rank < 1) throw InvalidLetter("rank must be positive, got " + std::to_string(rank));
}

std::strong_ordering shortlex(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ReducingBuffer::ReducingBuffer(int rank, std::size_t cap) : rank_(rank), cap_(cap) {
  check_rank(rank);
}

void ReducingBuffer::check_capacity() const {
  if (letters_.size() > cap_) {
    throw CapacityExceeded("word length exceeds letter cap " + std::to_string(cap_));
  }
}

void ReducingBuffer::push(Letter l) {
  check_letter(rank_, l);
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
    check_capacity();
  }
}

void ReducingBuffer::append(std::span<const Letter> letters) {
  for (Letter l : letters) push(l);
}

void ReducingBuffer::append_inverse(std::span<const Letter> letters) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) push(it->inverse());
}

void ReducingBuffer::throw_rank_mismatch(int other) const {
  throw RankMismatch("word of rank " + std::to_string(other) + " in a rank " + std::to_string(rank_) +
                     " buffer");
}

Word ReducingBuffer::take() && { return Word(rank_, std::move(letters_)); }

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::reduce(int rank, std::span<const Letter> raw, std::size_t cap) {
  ReducingBuffer buf(rank, cap);
  buf.append(raw);
  return std::move(buf).take();
}

Word Word::generator(int rank, int gen, int sign) {
  const Letter l(gen, sign);
  return reduce(rank, std::span<const Letter>(&l, 1));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(rank_, std::move(out));
}

Word Word::power(std::int64_t k, std::size_t cap) const {
  const Word base = k < 0 ? inverse() : *this;
  const std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  ReducingBuffer buf(rank_, cap);
  for (std::uint64_t i = 0; i < n; ++i) buf.append(base.letters());
  return std::move(buf).take();
}

std::int64_t Word::exponent_sum(int gen) const {
  std::int64_t s = 0;
  for (Letter l : letters_) {
    if (l.gen() == gen) s += l.sign();
  }
  return s;
}

std::int64_t Word::occurrences(int gen) const {
  return std::count_if(letters_.begin(), letters_.end(),
                       [gen](Letter l) { return l.gen() == gen; });
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
  return shortlex(a.letters_, b.letters_);
}

Word multiply(const Word& u, const Word& v, std::size_t cap) {
  if (u.rank() != v.rank()) {
    throw RankMismatch("cannot multiply words of rank " + std::to_string(u.rank()) +
                       " and " + std::to_string(v.rank()));
  }
  ReducingBuffer buf(u.rank(), cap);
  buf.reserve(u.size() + v.size());
  buf.append(u.letters());
  buf.append(v.letters());
  return std::move(buf).take();
}

namespace {

// Number of letters peeled from each end to reach the cyclic core.
std::size_t peel_depth(std::span<const Letter> w) {
  std::size_t i = 0;
  std::size_t j = w.size();
  while (j - i >= 2 && w[i] == w[j - 1].inverse()) {
    ++i;
    --j;
  }
  return i;
}

}  // namespace

CyclicDecomposition cyclic_reduce(const Word& w) {
  const auto letters = w.letters();
  const std::size_t k = peel_depth(letters);
  return {Word::reduce(w.rank(), letters.subspan(k, letters.size() - 2 * k)),
          Word::reduce(w.rank(), letters.first(k))};
}

Word cyclic_core(const Word& w) {
  const auto letters = w.letters();
  const std::size_t k = peel_depth(letters);
  if (k == 0) return w;
  const auto core = letters.subspan(k, letters.size() - 2 * k);
  return Word(w.rank(), std::vector<Letter>(core.begin(), core.end()));
}

Word cyclic_core(Word&& w) {
  const std::size_t k = peel_depth(w.letters_);
  if (k > 0) {
    w.letters_.resize(w.letters_.size() - k);
    w.letters_.erase(w.letters_.begin(), w.letters_.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return std::move(w);
}

std::size_t cyclic_length(const Word& w) { return w.size() - 2 * peel_depth(w.letters()); }

std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  // Booth's algorithm over the doubled sequence.
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return s[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = at(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      // i == -1 here
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

Word CyclicWord::to_word() const { return Word::reduce(rank_, letters_); }

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
  return shortlex(a.letters_, b.letters_);
}

CyclicWord canonical_cyclic_from_core(int rank, std::span<const Letter> core) {
  CyclicWord out(rank);
  const std::size_t start = least_rotation(core);
  out.letters_.reserve(core.size());
  out.letters_.insert(out.letters_.end(), core.begin() + static_cast<std::ptrdiff_t>(start),
                      core.end());
  out.letters_.insert(out.letters_.end(), core.begin(),
                      core.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

CyclicWord canonical_cyclic(const Word& w) {
  const auto letters = w.letters();
  const std::size_t k = peel_depth(letters);
  return canonical_cyclic_from_core(w.rank(), letters.subspan(k, letters.size() - 2 * k));
}

}  // namespace fbc

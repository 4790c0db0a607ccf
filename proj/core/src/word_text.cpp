#include "fbc/word_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>

#include "fbc/error.hpp"

namespace fbc {

Alphabet Alphabet::standard(int rank) {
  if (rank < 1 || rank > 26) {
    throw InvalidLetter("text syntax supports ranks 1..26, got " + std::to_string(rank));
  }
  std::vector<char> names;
  for (int i = 0; i < rank; ++i) names.push_back(static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

Alphabet::Alphabet(std::vector<char> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidLetter("alphabet needs at least one generator");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const char c = names_[i];
    if (c < 'a' || c > 'z') {
      throw InvalidLetter(std::string("generator name '") + c + "' is not a lowercase letter");
    }
    auto& slot = index_[static_cast<std::size_t>(c - 'a')];
    if (slot != 0) throw InvalidLetter(std::string("duplicate generator name '") + c + "'");
    slot = static_cast<int>(i) + 1;
  }
}

int Alphabet::index_of(char c) const {
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower < 'a' || lower > 'z') return 0;
  return index_[static_cast<std::size_t>(lower - 'a')];
}

TextPosition locate(std::string_view text, std::size_t offset) {
  TextPosition pos{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

namespace {

[[noreturn]] void fail(std::string_view doc, std::size_t offset, const std::string& what) {
  const auto pos = locate(doc, offset);
  throw ParseError(what, pos.line, pos.column);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Word parse_word_in(std::string_view doc, std::size_t begin, std::size_t end,
                   const Alphabet& alphabet) {
  ReducingBuffer buf(alphabet.rank());
  std::size_t i = begin;
  auto skip_space = [&] {
    while (i < end && is_space(doc[i])) ++i;
  };
  skip_space();
  while (i < end) {
    const char c = doc[i];
    if (c == '1') {
      ++i;
      skip_space();
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail(doc, i, std::string("unexpected character '") + c + "' in word");
    }
    const int gen = alphabet.index_of(c);
    if (gen == 0) fail(doc, i, std::string("unknown generator '") + c + "'");
    const int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    ++i;
    skip_space();

    std::int64_t exponent = 1;
    if (i < end && doc[i] == '^') {
      const std::size_t caret = i;
      ++i;
      skip_space();
      bool negative = false;
      if (i < end && (doc[i] == '-' || doc[i] == '+')) {
        negative = doc[i] == '-';
        ++i;
        skip_space();
      }
      const std::size_t digits = i;
      while (i < end && std::isdigit(static_cast<unsigned char>(doc[i]))) ++i;
      if (digits == i) fail(doc, caret, "exponent '^' must be followed by an integer");
      std::uint64_t magnitude = 0;
      const auto [ptr, ec] = std::from_chars(doc.data() + digits, doc.data() + i, magnitude);
      if (ec != std::errc{} || magnitude > static_cast<std::uint64_t>(kDefaultLetterCap)) {
        fail(doc, digits, "exponent out of range");
      }
      exponent = negative ? -static_cast<std::int64_t>(magnitude)
                          : static_cast<std::int64_t>(magnitude);
      skip_space();
    }

    const Letter l = exponent < 0 ? Letter(gen, -sign) : Letter(gen, sign);
    const std::int64_t reps = exponent < 0 ? -exponent : exponent;
    for (std::int64_t k = 0; k < reps; ++k) buf.push(l);
  }
  return std::move(buf).take();
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return parse_word_in(text, 0, text.size(), alphabet);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    const char name = alphabet.name(l.gen());
    out.push_back(l.positive() ? name
                               : static_cast<char>(std::toupper(static_cast<unsigned char>(name))));
  }
  return out;
}

std::string format_word(const Word& w) { return format_word(w, Alphabet::standard(w.rank())); }

}  // namespace fbc

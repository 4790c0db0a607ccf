#include "fbc/automorphism_text.hpp"

#include <cctype>
#include <vector>

#include "fbc/error.hpp"
#include "fbc/word_text.hpp"

namespace fbc {

namespace {

struct Rule {
  char gen;
  std::size_t gen_offset;
  std::size_t word_begin;
  std::size_t word_end;
};

[[noreturn]] void fail(std::string_view doc, std::size_t offset, const std::string& what) {
  const auto pos = locate(doc, offset);
  throw ParseError(what, pos.line, pos.column);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Rule> split_rules(std::string_view doc) {
  std::vector<Rule> rules;
  std::size_t start = 0;
  while (start <= doc.size()) {
    std::size_t stop = start;
    while (stop < doc.size() && doc[stop] != ';' && doc[stop] != '\n') ++stop;

    std::size_t i = start;
    while (i < stop && is_space(doc[i])) ++i;
    if (i < stop) {
      const char g = doc[i];
      if (g < 'a' || g > 'z') fail(doc, i, "rule must start with a lowercase generator name");
      const std::size_t gen_offset = i++;
      while (i < stop && is_space(doc[i])) ++i;
      if (i + 1 >= stop || doc[i] != '-' || doc[i + 1] != '>') fail(doc, i, "expected '->'");
      std::size_t w = i + 2;
      while (w < stop && is_space(doc[w])) ++w;
      if (w == stop) fail(doc, i + 2, "empty image (write 1 for the identity)");
      rules.push_back({g, gen_offset, i + 2, stop});
    }
    start = stop + 1;
  }
  return rules;
}

}  // namespace

FreeMap parse_automorphism(std::string_view text, std::optional<int> rank_override) {
  const std::vector<Rule> rules = split_rules(text);
  if (rules.empty() && !rank_override) fail(text, 0, "no rules");
  const int rank = rank_override.value_or(static_cast<int>(rules.size()));
  if (rank < 1 || rank > 26) {
    throw ParseError("rank must be in 1..26, got " + std::to_string(rank), 1, 1);
  }

  std::vector<const Rule*> by_gen(static_cast<std::size_t>(rank), nullptr);
  for (const Rule& rule : rules) {
    const int gen = rule.gen - 'a' + 1;
    if (gen > rank) {
      fail(text, rule.gen_offset,
           std::string("generator '") + rule.gen + "' outside rank " + std::to_string(rank));
    }
    auto& slot = by_gen[static_cast<std::size_t>(gen - 1)];
    if (slot) {
      const auto pos = locate(text, rule.gen_offset);
      throw DuplicateRule(std::string("generator '") + rule.gen + "' defined twice (line " +
                          std::to_string(pos.line) + ", column " + std::to_string(pos.column) +
                          ")");
    }
    slot = &rule;
  }

  const Alphabet alphabet = Alphabet::standard(rank);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g) {
    const Rule* rule = by_gen[static_cast<std::size_t>(g - 1)];
    if (!rule) {
      throw MissingGenerator(std::string("no rule for generator '") + alphabet.name(g) + "'");
    }
    images.push_back(parse_word_in(text, rule->word_begin, rule->word_end, alphabet));
  }
  return FreeMap(rank, std::move(images));
}

std::string format_automorphism(const FreeMap& f) {
  const Alphabet alphabet = Alphabet::standard(f.rank());
  std::string out;
  for (int g = 1; g <= f.rank(); ++g) {
    if (g > 1) out += "; ";
    out += alphabet.name(g);
    out += "->";
    out += format_word(f.image(g), alphabet);
  }
  return out;
}

}  // namespace fbc

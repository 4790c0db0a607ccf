#include "fbc/mapping_torus.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fbc/error.hpp"
#include "fbc/word_text.hpp"

namespace fbc {

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  if (names_.empty()) throw InvalidLetter("a presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidLetter("empty generator name");
    if (!seen.insert(n).second) throw InvalidLetter("duplicate generator name '" + n + "'");
  }
  for (const Word& r : relators_) {
    if (r.rank() != generator_count()) {
      throw RankMismatch("relator of rank " + std::to_string(r.rank()) + " in a presentation on " +
                         std::to_string(generator_count()) + " generators");
    }
  }
}

Presentation mapping_torus_presentation(const FreeMap& f, std::vector<std::string> names) {
  const int r = f.rank();
  const int n = r + 1;
  if (names.empty()) {
    std::set<char> used;
    for (int i = 0; i < r; ++i) {
      const char c = static_cast<char>('a' + i);
      names.emplace_back(1, c);
      used.insert(c);
    }
    char t = 't';
    if (used.count(t)) {
      t = 'a';
      while (t <= 'z' && used.count(t)) ++t;
      if (t > 'z') throw InvalidLetter("no free letter for the stable letter at rank " + std::to_string(r));
    }
    names.emplace_back(1, t);
  }
  if (static_cast<int>(names.size()) != n) {
    throw RankMismatch("mapping torus of rank " + std::to_string(r) + " needs " +
                       std::to_string(n) + " names");
  }

  std::vector<Word> relators;
  relators.reserve(static_cast<std::size_t>(r));
  const Letter t(n, 1);
  for (int g = 1; g <= r; ++g) {
    std::vector<Letter> raw{t.inverse(), Letter(g, 1), t};
    // f(a_g)⁻¹, embedded in the rank n+1 alphabet
    const auto img = f.image(g).letters();
    for (auto it = img.rbegin(); it != img.rend(); ++it) raw.push_back(it->inverse());
    relators.push_back(Word::reduce(n, raw));
  }
  return Presentation(std::move(names), std::move(relators));
}

IntMatrix relator_matrix(const Presentation& p) {
  const auto n = static_cast<std::size_t>(p.generator_count());
  IntMatrix m(n, p.relators().size());
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    for (Letter l : p.relators()[j].letters()) m(static_cast<std::size_t>(l.gen() - 1), j) += l.sign();
  }
  return m;
}

namespace {

AbelianInvariants from_smith(std::int64_t generators, const SmithForm& s) {
  AbelianInvariants out;
  std::int64_t nonzero = 0;
  for (const BigInt& d : s.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.betti = generators - nonzero;
  return out;
}

}  // namespace

AbelianInvariants abelian_invariants(const Presentation& p) {
  if (p.relators().empty()) return {p.generator_count(), {}};
  return from_smith(p.generator_count(), smith_normal_form(relator_matrix(p)));
}

AbelianInvariants mapping_torus_invariants(const FreeMap& f) {
  const IntMatrix a = abelianization_matrix(f) - IntMatrix::identity(static_cast<std::size_t>(f.rank()));
  // The stable letter contributes the extra free coordinate.
  return from_smith(f.rank() + 1, smith_normal_form(a));
}

namespace {

[[noreturn]] void fail(std::string_view doc, std::size_t offset, const std::string& what) {
  const auto pos = locate(doc, offset);
  throw ParseError(what, pos.line, pos.column);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Presentation parse_presentation(std::string_view doc) {
  std::vector<char> gens;
  bool have_gens = false;
  struct Pending {
    std::size_t begin, end;
  };
  std::vector<Pending> rels;

  std::size_t start = 0;
  while (start <= doc.size()) {
    std::size_t stop = start;
    while (stop < doc.size() && doc[stop] != ';' && doc[stop] != '\n') ++stop;
    std::size_t i = start;
    while (i < stop && is_space(doc[i])) ++i;
    if (i < stop && doc[i] != '#') {
      const std::size_t colon = doc.find(':', i);
      if (colon == std::string_view::npos || colon >= stop) fail(doc, i, "expected 'gens:' or 'rel:'");
      std::size_t kw_end = colon;
      while (kw_end > i && is_space(doc[kw_end - 1])) --kw_end;
      const std::string_view keyword = doc.substr(i, kw_end - i);
      if (keyword == "gens") {
        if (have_gens) fail(doc, i, "duplicate 'gens:' clause");
        have_gens = true;
        for (std::size_t k = colon + 1; k < stop; ++k) {
          if (is_space(doc[k]) || doc[k] == ',') continue;
          if (doc[k] < 'a' || doc[k] > 'z' || (k + 1 < stop && std::isalnum(static_cast<unsigned char>(doc[k + 1])))) {
            fail(doc, k, "generator names must be single lowercase letters");
          }
          if (std::find(gens.begin(), gens.end(), doc[k]) != gens.end()) {
            fail(doc, k, std::string("duplicate generator '") + doc[k] + "'");
          }
          gens.push_back(doc[k]);
        }
        if (gens.empty()) fail(doc, colon, "'gens:' lists no generators");
      } else if (keyword == "rel") {
        rels.push_back({colon + 1, stop});
      } else {
        fail(doc, i, "unknown clause '" + std::string(keyword) + "'");
      }
    }
    start = stop + 1;
  }
  if (!have_gens) fail(doc, 0, "missing 'gens:' clause");

  const Alphabet alphabet(gens);
  std::vector<Word> relators;
  relators.reserve(rels.size());
  for (const auto& r : rels) relators.push_back(parse_word_in(doc, r.begin, r.end, alphabet));
  std::vector<std::string> names;
  for (char c : gens) names.emplace_back(1, c);
  return Presentation(std::move(names), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::vector<char> letters;
  for (const auto& n : p.generator_names()) {
    if (n.size() != 1) throw InvalidLetter("text format needs single-letter generator names");
    letters.push_back(n[0]);
  }
  const Alphabet alphabet(letters);
  std::string out = "gens:";
  for (char c : letters) {
    out += ' ';
    out += c;
  }
  for (const Word& r : p.relators()) out += "; rel: " + format_word(r, alphabet);
  return out;
}

}  // namespace fbc

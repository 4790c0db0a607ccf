#include <gtest/gtest.h>

#include <random>

#include "fbc/automorphism_text.hpp"
#include "fbc/error.hpp"
#include "fbc/free_map.hpp"
#include "fbc/word_text.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace fbc {
namespace {

using testing::psi;

Word W(const char* text, int rank = 3) { return parse_word(text, rank); }

TEST(Apply, Examples) {
  EXPECT_EQ(apply(psi(), W("a")), W("b"));
  // ψ(c⁻¹) = a c⁻¹, then a c⁻¹ · c = a
  EXPECT_EQ(apply(psi(), W("Cb")), W("a"));
  EXPECT_EQ(apply(FreeMap::identity(3), W("abCaa")), W("abCaa"));
  EXPECT_THROW(apply(psi(), W("a", 2)), RankMismatch);
}

TEST(Apply, IsAHomomorphism) {
  std::mt19937_64 rng(1);
  const FreeMap f = random_nielsen_automorphism(3, 6, rng);
  std::uniform_int_distribution<int> gen(1, 3), sign(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Letter> a, b;
    for (int k = 0; k < 8; ++k) a.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    for (int k = 0; k < 8; ++k) b.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    const Word u = Word::reduce(3, a), v = Word::reduce(3, b);
    EXPECT_EQ(apply(f, u * v), apply(f, u) * apply(f, v));
  }
}

TEST(Apply, RespectsLetterCap) {
  const FreeMap doubling = parse_automorphism("a->aa");
  EXPECT_THROW(apply(doubling, parse_word("a^6", 1), 10), CapacityExceeded);
}

TEST(Compose, Examples) {
  const FreeMap psi2 = compose(psi(), psi());
  EXPECT_EQ(psi2.image(1), W("c"));
  EXPECT_EQ(psi2.image(3), W("cAB"));
  EXPECT_EQ(compose(psi(), FreeMap::identity(3)), psi());
  EXPECT_EQ(compose(FreeMap::identity(3), psi()), psi());
  EXPECT_THROW(compose(psi(), FreeMap::identity(2)), RankMismatch);
}

TEST(Invert, Psi) {
  const auto inv = invert(psi());
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, testing::psi_inverse());
  EXPECT_EQ(compose(psi(), *inv), FreeMap::identity(3));
  EXPECT_EQ(compose(*inv, psi()), FreeMap::identity(3));
}

TEST(Invert, IdentityAndNonAutomorphisms) {
  EXPECT_EQ(invert(FreeMap::identity(3)), FreeMap::identity(3));
  EXPECT_FALSE(invert(parse_automorphism(testing::kNonAutomorphismText)));
  // |det| = 1 but not surjective: the Nielsen step has to reject it.
  EXPECT_FALSE(invert(parse_automorphism("a->abaBA; b->b")));
  EXPECT_FALSE(invert(parse_automorphism("a->aa")));
  EXPECT_FALSE(invert(parse_automorphism("a->1; b->b")));
}

TEST(Invert, RandomAutomorphismsRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = 1 + trial % 4;
    const FreeMap f = random_nielsen_automorphism(rank, 1 + trial % 20, rng);
    const auto g = invert(f);
    ASSERT_TRUE(g) << format_automorphism(f);
    EXPECT_EQ(compose(f, *g), FreeMap::identity(rank));
    EXPECT_EQ(compose(*g, f), FreeMap::identity(rank));
    EXPECT_EQ(abs(determinant(abelianization_matrix(f))), 1);
  }
}

// Bases on which a plain lexicographic tiebreak stalls.
TEST(Invert, StallRegressions) {
  for (const char* text : {
           "a->cabcAbcAbadAbcAACbcAbadAbcAACbcbcAbcAbadAbcAACbadAbcAACbcbcAbcAbadAbcAACaCB; "
           "b->bcAbadAbcAACbcbcAbcAbadAbcAACaCB; c->caaCBaDABaCBaCBCBcaaCBaDABaCBcaaCBaDABaCB; "
           "d->aCBAC",
           "a->CbaaBcBCbaaBcBBcBCbaaBcBAABcaBcBCbaaBcBBcBCbaaBcBBcBCbaaBcBCbaaBcBBcBCbaabCbAABcbCbAAB"
           "cbCbbCbAABcbCbAABcbCbbCbAABcbCbAABcbCbbCbAABcbCbbCbAABcbCbAABc; "
           "b->CbaaBcBCbaaBcBBcBCbaaBcBBcBCbaabCbAABcbCbAABcbCbbCbAABcbCbAABcbCbbCbAABcbCbAABcbCbbCbAA"
           "BcbCbAABcbCbbCbAABcbCbbCbAABcbCbACbaabCbAABcbCbbCbAABcbCbACbaabCbAABcbCbbCbAABcbCbAABc; "
           "c->CbaaBcBCbaaBcBBcBCbaaBcBAABcaBcBCbaaBcBBcBCbaaBcBBcBCbaaBcBCbaaBcBBcBCbaabCbAABcbCbAAB"
           "cbCbbCbAABcbCbAABcbCbbCbAABcbCbAABcbCbbCbAABcbCbAABcbCbbCbAABcbCbbCbAABcbCbACbaabCbAABcbC"
           "bbCbAABcbCbACbaabCbAABcbCbbCbAABcbCbAABc",
       }) {
    const FreeMap f = parse_automorphism(text);
    const auto g = invert(f);
    ASSERT_TRUE(g);
    EXPECT_EQ(compose(f, *g), FreeMap::identity(f.rank()));
  }
}

TEST(AbelianizationMatrix, Examples) {
  EXPECT_EQ(abelianization_matrix(psi()), (IntMatrix{{0, 0, -1}, {1, 0, 0}, {0, 1, 1}}));
  EXPECT_EQ(abelianization_matrix(FreeMap::identity(3)), IntMatrix::identity(3));
  EXPECT_EQ(abelianization_matrix(parse_automorphism("a->ab; b->b")), (IntMatrix{{1, 0}, {1, 1}}));
}

TEST(TransitionMatrix, Examples) {
  EXPECT_EQ(transition_matrix(psi()), (IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}));
  EXPECT_EQ(transition_matrix(FreeMap::identity(3)), IntMatrix::identity(3));
  EXPECT_EQ(transition_matrix(parse_automorphism("a->ab; b->b")), (IntMatrix{{1, 0}, {1, 1}}));
}

TEST(Matrices, Properties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const FreeMap f = random_nielsen_automorphism(3, 5, rng);
    const FreeMap g = random_nielsen_automorphism(3, 5, rng);
    EXPECT_EQ(abelianization_matrix(compose(f, g)), abelianization_matrix(f) * abelianization_matrix(g));
    const IntMatrix a = abelianization_matrix(f), t = transition_matrix(f);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) EXPECT_LE(abs(a(i, j)), t(i, j));
    }
  }
}

TEST(Apply, InducesAMapOnConjugacyClasses) {
  std::mt19937_64 rng(5);
  const FreeMap f = random_nielsen_automorphism(3, 8, rng);
  std::uniform_int_distribution<int> gen(1, 3), sign(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Letter> a, b;
    for (int k = 0; k < 5; ++k) a.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    for (int k = 0; k < 7; ++k) b.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    const Word u = Word::reduce(3, a), w = Word::reduce(3, b);
    const Word conj = u * w * u.inverse();
    ASSERT_EQ(canonical_cyclic(conj), canonical_cyclic(w));
    EXPECT_EQ(canonical_cyclic(apply(f, conj)), canonical_cyclic(apply(f, w)));
  }
}

TEST(Conjugate, IsSigmaFSigmaInverse) {
  std::mt19937_64 rng(8);
  const FreeMap sigma = random_nielsen_automorphism(3, 4, rng);
  const FreeMap c = conjugate(sigma, psi());
  EXPECT_EQ(compose(c, sigma), compose(sigma, psi()));
  EXPECT_THROW(conjugate(parse_automorphism(testing::kNonAutomorphismText), psi()), NotAutomorphism);
}

TEST(AutomorphismText, Parse) {
  EXPECT_EQ(parse_automorphism("a->b; b->c; c->cA").image(3), W("cA"));
  EXPECT_EQ(parse_automorphism("a->a"), FreeMap::identity(1));
  EXPECT_EQ(parse_automorphism("b->a\na->b"), parse_automorphism("a->b; b->a"));
  EXPECT_EQ(parse_automorphism("a->a", 1), FreeMap::identity(1));
  EXPECT_THROW(parse_automorphism("a->b; a->c"), DuplicateRule);
  EXPECT_THROW(parse_automorphism("a->a", 2), MissingGenerator);
  EXPECT_THROW(parse_automorphism("a->a; c->c"), ParseError);
  EXPECT_THROW(parse_automorphism("a=>b"), ParseError);
  EXPECT_THROW(parse_automorphism("a->"), ParseError);
  EXPECT_THROW(parse_automorphism(""), ParseError);
}

TEST(AutomorphismText, ParseErrorPosition) {
  try {
    parse_automorphism("a->b\nb->c\nc->c%");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(AutomorphismText, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const FreeMap f = random_nielsen_automorphism(1 + trial % 5, 6, rng);
    EXPECT_EQ(parse_automorphism(format_automorphism(f)), f);
  }
}

}  // namespace
}  // namespace fbc

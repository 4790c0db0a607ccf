#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fbc/dynamics.hpp"
#include "fbc/error.hpp"
#include "fbc/intlin.hpp"
#include "fbc/word_text.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace fbc {
namespace {

using testing::psi;

CyclicWord C(const char* text, int rank = 3) { return canonical_cyclic(parse_word(text, rank)); }

TEST(HalfWindow, Examples) {
  EXPECT_DOUBLE_EQ(half_window_estimate({}, 0), 1.0);
  EXPECT_DOUBLE_EQ(half_window_estimate({1, 1, 1, 1}, 3), 1.0);
  // m = 2, n = 4: (16/4)^(1/2)
  EXPECT_DOUBLE_EQ(half_window_estimate({1, 2, 4, 8, 16}, 4), 2.0);
  // shrinking orbits clamp to 1
  EXPECT_DOUBLE_EQ(half_window_estimate({8, 4, 2, 1}, 3), 1.0);
}

TEST(EstimateStretch, Psi) {
  const auto est = estimate_stretch(psi());
  EXPECT_NEAR(est.lambda_hat, 1.167, 0.01);
  EXPECT_TRUE(est.converged);
  EXPECT_FALSE(est.truncated);
  ASSERT_EQ(est.seeds.size(), 3u);
  EXPECT_EQ(est.seeds[est.best_seed].seed, parse_word("c", 3));
  for (const auto& s : est.seeds) {
    EXPECT_EQ(s.lengths.size(), static_cast<std::size_t>(kDefaultDepth) + 1);
    EXPECT_EQ(s.lengths[0], 1u);
    EXPECT_LE(s.lambda_hat, est.lambda_hat);
  }
}

TEST(EstimateStretch, LengthsAreCyclicLengthsOfIterates) {
  StretchOptions opts;
  opts.depth = 12;
  const auto est = estimate_stretch(psi(), opts);
  Word w = parse_word("a", 3);
  for (std::size_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(est.seeds[0].lengths[n], cyclic_length(w));
    w = apply(psi(), w);
  }
}

TEST(EstimateStretch, FiniteOrderMapsGiveOne) {
  EXPECT_DOUBLE_EQ(estimate_stretch(FreeMap::identity(3)).lambda_hat, 1.0);
  const auto cycle = estimate_stretch(parse_automorphism("a->b; b->c; c->a"));
  EXPECT_DOUBLE_EQ(cycle.lambda_hat, 1.0);
  EXPECT_TRUE(cycle.converged);
}

TEST(EstimateStretch, TruncatesAtLengthCap) {
  StretchOptions opts;
  opts.length_cap = 1000;
  const auto est = estimate_stretch(psi(), opts);
  EXPECT_TRUE(est.truncated);
  for (const auto& s : est.seeds) {
    EXPECT_LT(s.lengths.size(), static_cast<std::size_t>(kDefaultDepth) + 1);
    EXPECT_TRUE(std::all_of(s.lengths.begin(), s.lengths.end() - 1, [](auto l) { return l <= 1000; }));
  }
}

TEST(EstimateStretch, CustomSeeds) {
  StretchOptions opts;
  opts.seeds = {parse_word("ab", 3)};
  const auto est = estimate_stretch(psi(), opts);
  ASSERT_EQ(est.seeds.size(), 1u);
  EXPECT_NEAR(est.lambda_hat, 1.167, 0.01);
}

// A single seed never shares an orbit, so this recomputes every orbit directly.
TEST(EstimateStretch, SharedOrbitsMatchSeparateRuns) {
  std::mt19937_64 rng(17);
  std::vector<FreeMap> maps{psi(), testing::psi_inverse(), parse_automorphism("a->b; b->c; c->a"),
                            parse_automorphism("a->b; b->a; c->cab")};
  for (int trial = 0; trial < 10; ++trial) maps.push_back(random_nielsen_automorphism(3, 3, rng));
  for (const FreeMap& f : maps) {
    for (std::uint64_t cap : {std::uint64_t{500}, kDefaultLengthCap}) {
      StretchOptions opts;
      opts.depth = 40;
      opts.length_cap = cap;
      const auto together = estimate_stretch(f, opts);
      for (const auto& s : together.seeds) {
        StretchOptions alone = opts;
        alone.seeds = {s.seed};
        const auto single = estimate_stretch(f, alone).seeds[0];
        EXPECT_EQ(s.lengths, single.lengths) << format_automorphism(f);
        EXPECT_EQ(s.truncated, single.truncated);
        EXPECT_EQ(s.converged, single.converged);
      }
    }
  }
}

TEST(EstimateStretch, WorkerCountDoesNotChangeResult) {
  StretchOptions one, four;
  four.workers = 4;
  const auto a = estimate_stretch(psi(), one), b = estimate_stretch(psi(), four);
  EXPECT_EQ(a.lambda_hat, b.lambda_hat);
  for (std::size_t i = 0; i < a.seeds.size(); ++i) EXPECT_EQ(a.seeds[i].lengths, b.seeds[i].lengths);
}

// Letter counts only overestimate growth. Polynomially growing maps are
// checked separately: at finite depth the half-window estimate of a degree-d
// polynomial orbit is about 2^(2d/depth), above 1 + 0.02 once d ≥ 2.
TEST(EstimateStretch, BoundedByTransitionEigenvalue) {
  std::mt19937_64 rng(314);
  int exponential = 0, polynomial = 0;
  std::vector<FreeMap> maps{psi(), testing::psi_inverse()};
  for (int trial = 0; trial < 30; ++trial) maps.push_back(random_nielsen_automorphism(2 + trial % 2, 4, rng));
  for (const FreeMap& f : maps) {
    const double lambda = estimate_stretch(f).lambda_hat;
    const double pf = dominant_eigenvalue(transition_matrix(f)).value;
    EXPECT_GE(lambda, 1.0);
    if (pf > 1.1) {
      ++exponential;
      EXPECT_LE(lambda, pf + 0.02) << format_automorphism(f);
    } else {
      ++polynomial;
      StretchOptions deeper;
      deeper.depth = 2 * kDefaultDepth;
      EXPECT_LE(lambda, 1.05) << format_automorphism(f);
      EXPECT_LE(estimate_stretch(f, deeper).lambda_hat, lambda) << format_automorphism(f);
    }
  }
  EXPECT_GT(exponential, 10);
  EXPECT_GT(polynomial, 0);
}

TEST(EstimateStretch, ConjugationInvariance) {
  const double base = estimate_stretch(psi()).lambda_hat;
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 3; ++trial) {
    const FreeMap sigma = random_nielsen_automorphism(3, 3, rng);
    EXPECT_NEAR(estimate_stretch(conjugate(sigma, psi())).lambda_hat, base, 0.02);
  }
}

TEST(StretchPair, Psi) {
  const auto pair = stretch_pair(psi());
  EXPECT_NEAR(pair.forward.lambda_hat, 1.167, 0.01);
  EXPECT_NEAR(pair.inverse.lambda_hat, 1.3247, 0.01);
  EXPECT_DOUBLE_EQ(pair.min(), pair.forward.lambda_hat);
  EXPECT_DOUBLE_EQ(pair.max(), pair.inverse.lambda_hat);
  // the inverse estimate stays near the real root of x³ − x − 1
  EXPECT_LE(pair.inverse.lambda_hat, testing::bisect_root({1.0, 0.0, -1.0, -1.0}, 1.0, 2.0) + 0.01);
}

TEST(StretchPair, IdentityAndTransvection) {
  const auto id = stretch_pair(FreeMap::identity(2));
  EXPECT_DOUBLE_EQ(id.min(), 1.0);
  EXPECT_DOUBLE_EQ(id.max(), 1.0);
  // polynomial growth: the half-window estimate tends to 1 slowly
  const auto tv = stretch_pair(parse_automorphism("a->ab; b->b"));
  EXPECT_NEAR(tv.min(), 1.0, 0.05);
  EXPECT_NEAR(tv.max(), 1.0, 0.05);
  EXPECT_THROW(stretch_pair(parse_automorphism(testing::kNonAutomorphismText)), NotAutomorphism);
}

TEST(EnumerateCyclicWords, CountsMatchNecklaceFormula) {
  // Burnside over rotations of the 3ⁿ + 1 + (1 + (−1)ⁿ) cyclically reduced
  // words: 4, 8, 12, 26 classes for n = 1..4
  EXPECT_EQ(enumerate_cyclic_words(2, 1).size(), 4u);
  EXPECT_EQ(enumerate_cyclic_words(2, 2).size(), 8u);
  EXPECT_EQ(enumerate_cyclic_words(2, 3).size(), 12u);
  EXPECT_EQ(enumerate_cyclic_words(2, 4).size(), 26u);
  for (const auto& w : enumerate_cyclic_words(3, 4)) {
    EXPECT_EQ(canonical_cyclic(w.to_word()), w);
    EXPECT_EQ(cyclic_length(w.to_word()), 4u);
  }
}

TEST(ScanPeriodic, PsiHasNoShortPeriodicClasses) {
  const auto scan = scan_periodic_classes(psi(), {6, 6, 1});
  EXPECT_TRUE(scan.orbits.empty());
  EXPECT_GT(scan.candidates, 0u);
}

TEST(ScanPeriodic, Swap) {
  const auto scan = scan_periodic_classes(testing::swap_ab(), {1, 1, 1});
  EXPECT_EQ(scan.orbits, (std::vector<PeriodicOrbit>{{C("c"), 1}, {C("C"), 1}}));

  const auto two = scan_periodic_classes(testing::swap_ab(), {1, 2, 1});
  EXPECT_EQ(two.orbits.size(), 6u);
  for (const auto& o : two.orbits) EXPECT_EQ(o.period, o.rep.letters()[0].gen() == 3 ? 1 : 2);
}

TEST(ScanPeriodic, IdentityFixesEverything) {
  for (int r = 1; r <= 4; ++r) {
    const auto scan = scan_periodic_classes(FreeMap::identity(r), {1, 3, 1});
    EXPECT_EQ(scan.orbits.size(), static_cast<std::size_t>(2 * r));
  }
}

TEST(ScanPeriodic, OrbitsAreConsistent) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const FreeMap f = random_nielsen_automorphism(2, 3, rng);
    const auto scan = scan_periodic_classes(f, {4, 4, 1});
    EXPECT_TRUE(std::is_sorted(scan.orbits.begin(), scan.orbits.end(),
                               [](const auto& x, const auto& y) { return x.rep < y.rep; }));
    for (const auto& o : scan.orbits) {
      Word w = o.rep.to_word();
      for (int k = 1; k <= o.period; ++k) {
        w = apply(f, w);
        EXPECT_EQ(canonical_cyclic(w) == o.rep, k == o.period) << format_automorphism(f);
      }
    }
  }
}

TEST(ScanPeriodic, WorkersAgree) {
  std::mt19937_64 rng(56);
  const FreeMap f = random_nielsen_automorphism(3, 2, rng);
  EXPECT_EQ(scan_periodic_classes(f, {4, 4, 1}).orbits, scan_periodic_classes(f, {4, 4, 3}).orbits);
  EXPECT_THROW(scan_periodic_classes(parse_automorphism(testing::kNonAutomorphismText)), NotAutomorphism);
}

}  // namespace
}  // namespace fbc

#include "fbc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>

#include "fbc/error.hpp"
#include "parallel.hpp"

namespace fbc {

double half_window_estimate(const std::vector<std::uint64_t>& lengths, std::size_t n) {
  if (n == 0 || n >= lengths.size()) return 1.0;
  std::size_t m = (n + 1) / 2;
  if (m == n) m = 0;
  if (lengths[m] == 0 || lengths[n] == 0) return 1.0;
  const double ratio = static_cast<double>(lengths[n]) / static_cast<double>(lengths[m]);
  return std::max(1.0, std::pow(ratio, 1.0 / static_cast<double>(n - m)));
}

namespace {

// Orbits are compared over this many steps, while words stay this short, to
// find seeds whose orbit runs into the orbit of another seed.
constexpr std::size_t kProbeSteps = 8;
constexpr std::size_t kProbeLength = 64;

// lengths[n] = ‖fⁿ(seed)‖ until depth, the length cap, or the letter cap.
std::vector<std::uint64_t> orbit_lengths(const FreeMap& f, const Word& seed, const StretchOptions& options) {
  std::vector<std::uint64_t> lengths;
  // ‖f(u w u⁻¹)‖ = ‖f(w)‖, so iterating on cyclic cores is enough.
  Word w = cyclic_core(seed);
  lengths.push_back(w.size());
  for (int n = 1; n <= options.depth && lengths.back() <= options.length_cap; ++n) {
    try {
      w = cyclic_core(apply(f, w));
    } catch (const CapacityExceeded&) {
      break;
    }
    lengths.push_back(w.size());
  }
  return lengths;
}

void finish(SeedEstimate& est, const StretchOptions& options) {
  const std::size_t last = est.lengths.size() - 1;
  est.truncated = last < static_cast<std::size_t>(options.depth);
  est.lambda_hat = half_window_estimate(est.lengths, last);
  std::size_t m = (last + 1) / 2;
  if (m == last) m = 0;
  est.window = {m, last};
  if (last >= 4) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t n = last - 2; n <= last; ++n) {
      const double e = half_window_estimate(est.lengths, n);
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    est.converged = hi - lo <= kConvergenceTolerance * hi;
  }
}

struct Probe {
  std::vector<CyclicWord> classes;
  std::vector<std::uint64_t> lengths;
};

Probe probe(const FreeMap& f, const Word& seed) {
  Probe p;
  Word w = cyclic_core(seed);
  for (std::size_t n = 0; n < kProbeSteps && w.size() <= kProbeLength; ++n) {
    p.classes.push_back(canonical_cyclic(w));
    p.lengths.push_back(w.size());
    w = cyclic_core(apply(f, w));
  }
  return p;
}

// Seed i follows seed `target` shifted by `shift` steps from step `from` on:
// ‖f^n(seed_i)‖ = ‖f^(n−shift)(seed_target)‖ for n ≥ from.
struct Link {
  std::size_t target;
  std::size_t shift;
  std::size_t from;
};

}  // namespace

StretchEstimate estimate_stretch(const FreeMap& f, const StretchOptions& options) {
  std::vector<Word> seeds = options.seeds;
  if (seeds.empty()) {
    for (int g = 1; g <= f.rank(); ++g) seeds.push_back(Word::generator(f.rank(), g));
  }
  const std::size_t count = seeds.size();

  std::vector<Probe> probes;
  for (const Word& seed : seeds) probes.push_back(probe(f, seed));
  std::vector<std::optional<Link>> links(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t s = 0; s < probes[i].classes.size() && !links[i]; ++s) {
      for (std::size_t j = 0; j < count && !links[i]; ++j) {
        if (j == i || links[j]) continue;
        for (std::size_t t = 0; t <= s && t < probes[j].classes.size(); ++t) {
          // equal shifts would let two seeds point at each other
          if (s == t && j > i) break;
          if (probes[i].classes[s] == probes[j].classes[t]) {
            links[i] = Link{j, s - t, s};
            break;
          }
        }
      }
    }
  }

  StretchEstimate out;
  out.seeds.resize(count);
  std::vector<std::size_t> primary;
  for (std::size_t i = 0; i < count; ++i) {
    out.seeds[i].seed = seeds[i];
    if (!links[i]) primary.push_back(i);
  }
  detail::parallel_for(primary.size(), options.workers, [&](std::size_t k) {
    out.seeds[primary[k]].lengths = orbit_lengths(f, seeds[primary[k]], options);
  });

  // Links only point at seeds that were primary when linked, so following
  // them terminates.
  auto resolve = [&](auto&& self, std::size_t i) -> const std::vector<std::uint64_t>& {
    auto& lengths = out.seeds[i].lengths;
    if (!lengths.empty()) return lengths;
    const Link link = *links[i];
    const auto& target = self(self, link.target);
    lengths.assign(probes[i].lengths.begin(), probes[i].lengths.begin() + static_cast<std::ptrdiff_t>(link.from));
    for (std::size_t n = link.from; n <= static_cast<std::size_t>(options.depth) && n - link.shift < target.size();
         ++n) {
      lengths.push_back(target[n - link.shift]);
      if (lengths.back() > options.length_cap) break;
    }
    return lengths;
  };
  for (std::size_t i = 0; i < count; ++i) {
    resolve(resolve, i);
    finish(out.seeds[i], options);
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (out.seeds[i].lambda_hat > out.lambda_hat || i == 0) {
      out.lambda_hat = std::max(1.0, out.seeds[i].lambda_hat);
      out.best_seed = i;
    }
    out.truncated = out.truncated || out.seeds[i].truncated;
  }
  if (!out.seeds.empty()) out.converged = out.seeds[out.best_seed].converged;
  return out;
}

double StretchPair::min() const { return std::min(forward.lambda_hat, inverse.lambda_hat); }
double StretchPair::max() const { return std::max(forward.lambda_hat, inverse.lambda_hat); }

StretchPair stretch_pair(const FreeMap& f, const StretchOptions& options) {
  const auto inv = invert(f);
  if (!inv) throw NotAutomorphism("stretch pair needs an automorphism");
  return {estimate_stretch(f, options), estimate_stretch(*inv, options)};
}

std::vector<CyclicWord> enumerate_cyclic_words(int rank, int length) {
  std::vector<CyclicWord> out;
  if (length <= 0) return out;
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.emplace_back(g, 1);
    alphabet.emplace_back(g, -1);
  }
  const auto len = static_cast<std::size_t>(length);
  std::vector<Letter> word;
  word.reserve(len);

  // The first letter of a least rotation is its smallest letter.
  auto extend = [&](auto&& self) -> void {
    if (word.size() == len) {
      if (len > 1 && word.back() == word.front().inverse()) return;
      CyclicWord c = canonical_cyclic_from_core(rank, word);
      if (std::equal(c.letters().begin(), c.letters().end(), word.begin())) {
        out.push_back(std::move(c));
      }
      return;
    }
    for (Letter l : alphabet) {
      if (!word.empty() && (l < word.front() || l == word.back().inverse())) continue;
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  extend(extend);
  return out;
}

ScanResult scan_periodic_classes(const FreeMap& f, const ScanOptions& options) {
  const auto inv = invert(f);
  if (!inv) throw NotAutomorphism("periodic class scan needs an automorphism");
  // ‖f⁻¹(w)‖ ≤ mu ‖w‖, so a class at step k can only come back to length ℓ
  // within j more steps if its length is at most ℓ mu^j.
  const double mu = static_cast<double>(std::max<std::size_t>(1, inv->max_image_length()));

  std::vector<CyclicWord> candidates;
  for (int len = 1; len <= options.max_length; ++len) {
    auto layer = enumerate_cyclic_words(f.rank(), len);
    std::move(layer.begin(), layer.end(), std::back_inserter(candidates));
  }

  ScanResult result;
  result.candidates = candidates.size();
  std::mutex mutex;
  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (candidates.size() + kChunk - 1) / kChunk;
  detail::parallel_for(chunks, options.workers, [&](std::size_t chunk) {
    std::vector<PeriodicOrbit> found;
    const std::size_t end = std::min(candidates.size(), (chunk + 1) * kChunk);
    for (std::size_t c = chunk * kChunk; c < end; ++c) {
      const CyclicWord& rep = candidates[c];
      Word v = rep.to_word();
      for (int k = 1; k <= options.max_period; ++k) {
        v = cyclic_core(apply(f, v));
        const double bound =
            static_cast<double>(rep.size()) * std::pow(mu, options.max_period - k);
        if (static_cast<double>(v.size()) > bound) break;
        if (v.size() == rep.size() && canonical_cyclic_from_core(f.rank(), v.letters()) == rep) {
          found.push_back({rep, k});
          break;
        }
      }
    }
    std::lock_guard lock(mutex);
    result.orbits.insert(result.orbits.end(), found.begin(), found.end());
  });
  std::sort(result.orbits.begin(), result.orbits.end(),
            [](const PeriodicOrbit& a, const PeriodicOrbit& b) { return a.rep < b.rep; });
  return result;
}

}  // namespace fbc

#pragma once

// Growth of conjugacy classes under iteration of a free group automorphism.
//
// The stretch factor of f is sup over w of limsup ‖fⁿ(w)‖^(1/n), where ‖·‖
// is cyclically reduced length. We estimate it from finite orbits of a few
// seed words, and scan short conjugacy classes for periodic ones.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fbc/free_map.hpp"
#include "fbc/word.hpp"

namespace fbc {

inline constexpr int kDefaultDepth = 80;
inline constexpr std::uint64_t kDefaultLengthCap = 1'000'000;
inline constexpr double kConvergenceTolerance = 1e-3;

struct StretchOptions {
  int depth = kDefaultDepth;
  std::uint64_t length_cap = kDefaultLengthCap;
  /// Empty means the generators.
  std::vector<Word> seeds;
  unsigned workers = 1;
};

struct SeedEstimate {
  Word seed;
  /// lengths[n] = ‖fⁿ(seed)‖, n = 0..N.
  std::vector<std::uint64_t> lengths;
  double lambda_hat = 1.0;
  /// (m, n) with estimate (L(n)/L(m))^(1/(n−m)).
  std::pair<std::size_t, std::size_t> window{0, 0};
  bool converged = false;
  /// Iteration stopped before depth because of the length or letter cap.
  bool truncated = false;
};

struct StretchEstimate {
  std::vector<SeedEstimate> seeds;
  /// Maximum over seeds, at least 1.
  double lambda_hat = 1.0;
  std::size_t best_seed = 0;
  bool converged = false;
  bool truncated = false;
};

/// Half-window estimate (L(n)/L(m))^(1/(n−m)), m = ⌈n/2⌉, over lengths[0..n].
/// Returns 1 for empty or trivial orbits and never less than 1.
double half_window_estimate(const std::vector<std::uint64_t>& lengths, std::size_t n);

/// Does not validate that f is an automorphism.
StretchEstimate estimate_stretch(const FreeMap& f, const StretchOptions& options = {});

struct StretchPair {
  StretchEstimate forward;  // f
  StretchEstimate inverse;  // f⁻¹
  double min() const;
  double max() const;
};

/// Estimates for f and f⁻¹. Throws NotAutomorphism.
StretchPair stretch_pair(const FreeMap& f, const StretchOptions& options = {});

struct PeriodicOrbit {
  CyclicWord rep;
  int period = 0;

  friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

struct ScanOptions {
  int max_length = 6;
  int max_period = 6;
  unsigned workers = 1;
};

struct ScanResult {
  /// Sorted by representative.
  std::vector<PeriodicOrbit> orbits;
  std::uint64_t candidates = 0;
};

/// Every conjugacy class of cyclic length 1..max_length whose class returns
/// to itself within max_period applications of f, with its minimal period.
/// An empty result is a bounded certificate only. Throws NotAutomorphism.
ScanResult scan_periodic_classes(const FreeMap& f, const ScanOptions& options = {});

/// Canonical cyclic words of length exactly `length` over F_rank.
std::vector<CyclicWord> enumerate_cyclic_words(int rank, int length);

}  // namespace fbc

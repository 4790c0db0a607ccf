#pragma once

// Counting homomorphisms from finitely presented groups to small finite
// groups. Counts over a library of targets form a fingerprint: equal groups
// have equal fingerprints, so a difference separates them. Identical
// fingerprints over a finite library never certify profinite isomorphism.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbc/mapping_torus.hpp"

namespace fbc {

inline constexpr std::size_t kDefaultOrderCap = 2000;

/// Images of the points 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

/// Cycle notation with 1-based points, e.g. `(1 2 3)(4 5)`; `()` is the
/// identity. The degree is the largest point mentioned (at least `min_degree`).
/// Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t min_degree = 0);

/// A finite group as a multiplication table over element indices 0..order-1.
class FiniteGroup {
 public:
  /// Validates identity and inverse laws on every element and associativity
  /// on random triples. Throws std::invalid_argument on a bad table.
  FiniteGroup(std::string label, std::size_t order, std::vector<std::uint32_t> table,
              std::uint32_t identity);

  const std::string& label() const { return label_; }
  std::size_t order() const { return order_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return table_[x * order_ + y]; }
  std::uint32_t inverse(std::uint32_t x) const { return inverse_[x]; }

  /// Size of the subgroup generated by `gens`.
  std::size_t generated_order(std::span<const std::uint32_t> gens) const;

 private:
  std::string label_;
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_;
};

/// Closes `gens` under composition. Throws OrderCapExceeded.
FiniteGroup build_group_from_permutations(std::string label, std::span<const Permutation> gens,
                                          std::size_t order_cap = kDefaultOrderCap);

/// One generator per line in cycle notation; `#` starts a comment. The label
/// is the file name without extension.
FiniteGroup load_permutation_group_file(const std::filesystem::path& path,
                                        std::size_t order_cap = kDefaultOrderCap);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

FiniteGroup cyclic_group(std::size_t n);
/// Symmetries of the regular n-gon, order 2n, labelled D<n>.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
FiniteGroup alternating_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);

/// ℤ/2..ℤ/12, D4, D5, D6, Q8, A4, S4, A5; S5 appended when `deep`.
std::vector<FiniteGroup> standard_library(bool deep = false);

struct QuotientCounts {
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;

  friend bool operator==(const QuotientCounts&, const QuotientCounts&) = default;
};

struct EnumerationOptions {
  unsigned workers = 1;
};

std::uint64_t count_homs(const Presentation& p, const FiniteGroup& q,
                         const EnumerationOptions& options = {});
std::uint64_t count_epis(const Presentation& p, const FiniteGroup& q,
                         const EnumerationOptions& options = {});
QuotientCounts count_quotients(const Presentation& p, const FiniteGroup& q,
                               const EnumerationOptions& options = {});

/// Order in which the backtracking search assigns generators (0-based).
std::vector<int> assignment_order(const Presentation& p);
/// Same search with a caller-chosen order; counts do not depend on it.
QuotientCounts count_quotients_in_order(const Presentation& p, const FiniteGroup& q,
                                        std::span<const int> order,
                                        const EnumerationOptions& options = {});

struct FingerprintEntry {
  std::string label;
  std::size_t order = 0;
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;

  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

struct Fingerprint {
  std::vector<FingerprintEntry> entries;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// 16 hex digits: FNV-1a over the generator count and the sorted canonical
/// cyclic forms of the relators.
std::string presentation_hash(const Presentation& p);

/// Append-only text file of `hash<TAB>label<TAB>homs<TAB>epis` lines.
class FingerprintCache {
 public:
  /// Loads existing entries; a missing file is an empty cache.
  explicit FingerprintCache(std::filesystem::path path);

  std::optional<QuotientCounts> lookup(const std::string& hash, const std::string& label) const;
  /// Appends to the file and to memory.
  void record(const std::string& hash, const std::string& label, const QuotientCounts& counts);

  std::size_t size() const { return entries_.size(); }
  std::size_t hits() const { return hits_; }

 private:
  std::filesystem::path path_;
  std::map<std::pair<std::string, std::string>, QuotientCounts> entries_;
  mutable std::size_t hits_ = 0;
};

Fingerprint fingerprint(const Presentation& p, std::span<const FiniteGroup> library,
                        const EnumerationOptions& options = {},
                        FingerprintCache* cache = nullptr);

struct FingerprintComparison {
  bool identical = true;
  /// Index of the first differing entry.
  std::optional<std::size_t> first_difference;

  /// "IDENTICAL over library [..]" or "DIFFER at <label>: ...".
  std::string describe(const Fingerprint& a, const Fingerprint& b) const;
};

/// Throws LibraryMismatch when the libraries differ.
FingerprintComparison compare_fingerprints(const Fingerprint& a, const Fingerprint& b);

}  // namespace fbc

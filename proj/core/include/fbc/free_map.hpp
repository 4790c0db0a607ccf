#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fbc/intlin.hpp"
#include "fbc/word.hpp"

namespace fbc {

/// An endomorphism of F_rank, given by the images of the generators.
class FreeMap {
 public:
  /// Throws RankMismatch when an image has a different rank or the number of
  /// images differs from the rank.
  FreeMap(int rank, std::vector<Word> images);

  static FreeMap identity(int rank);

  int rank() const { return rank_; }
  /// Image of generator `gen` (1-based).
  const Word& image(int gen) const { return images_[static_cast<std::size_t>(gen - 1)]; }
  std::span<const Word> images() const { return images_; }

  /// Longest generator image.
  std::size_t max_image_length() const;

  friend bool operator==(const FreeMap&, const FreeMap&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

Word apply(const FreeMap& f, const Word& w, std::size_t cap = kDefaultLetterCap);

/// "f after g": generator x goes to f(g(x)).
FreeMap compose(const FreeMap& f, const FreeMap& g);

/// Inverse automorphism, or nullopt when f is not an automorphism.
std::optional<FreeMap> invert(const FreeMap& f);

/// Entry (i, j): signed exponent sum of generator i+1 in the image of
/// generator j+1.
IntMatrix abelianization_matrix(const FreeMap& f);

/// Entry (i, j): occurrences of generator i+1, either sign, in the image of
/// generator j+1.
IntMatrix transition_matrix(const FreeMap& f);

/// σ ∘ f ∘ σ⁻¹. Throws NotAutomorphism when σ is not invertible.
FreeMap conjugate(const FreeMap& sigma, const FreeMap& f);

/// An elementary Nielsen automorphism.
struct NielsenMove {
  enum class Kind { RightMultiply, LeftMultiply, Invert, Swap };
  Kind kind;
  int target;      // generator i, 1-based
  int other = 0;   // generator j for multiply/swap
  int sign = 1;    // exponent of x_j for multiply

  /// x_i ↦ x_i x_j^sign, x_i ↦ x_j^sign x_i, x_i ↦ x_i⁻¹, or x_i ↔ x_j.
  FreeMap as_map(int rank) const;
};

/// Product of `moves` uniformly random elementary Nielsen automorphisms.
FreeMap random_nielsen_automorphism(int rank, int moves, std::mt19937_64& rng);

}  // namespace fbc

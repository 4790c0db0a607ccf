#pragma once

// Finite presentations, mapping tori F_r ⋊_f ℤ and their first homology.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fbc/free_map.hpp"
#include "fbc/intlin.hpp"
#include "fbc/word.hpp"

namespace fbc {

class Presentation {
 public:
  /// Relators are words of rank names.size(). Throws InvalidLetter on
  /// duplicate names, RankMismatch on relators of the wrong rank.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// H₁ = ℤ^betti ⊕ ⊕ ℤ/dᵢ with 2 ≤ d₁ | d₂ | …
struct AbelianInvariants {
  std::int64_t betti = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Generators a₁..a_r, t and relators t⁻¹ aᵢ t · f(aᵢ)⁻¹, so that aᵢ^t = f(aᵢ)
/// with x^t = t⁻¹ x t. Default names are a, b, c, ... and t (or the first
/// letter not already used).
Presentation mapping_torus_presentation(const FreeMap& f, std::vector<std::string> names = {});

/// Exponent-sum matrix: rows are generators, columns relators.
IntMatrix relator_matrix(const Presentation& p);

AbelianInvariants abelian_invariants(const Presentation& p);

/// H₁ of the mapping torus from abelianization_matrix(f) − I: betti is
/// 1 + corank, torsion from its Smith form. Independent of the presentation.
AbelianInvariants mapping_torus_invariants(const FreeMap& f);

/// `gens: a b c t; rel: TatB; rel: TbtC`. Clauses are separated by `;` or newlines.
/// Generator names are single lowercase letters.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

}  // namespace fbc

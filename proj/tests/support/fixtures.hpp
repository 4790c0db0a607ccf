#pragma once

#include <vector>

#include "fbc/automorphism_text.hpp"
#include "fbc/mapping_torus.hpp"

namespace fbc::testing {

inline const char* const kPsiText = "a->b; b->c; c->cA";
inline const char* const kPsiInverseText = "a->Cb; b->a; c->b";
inline const char* const kSwapText = "a->b; b->a; c->c";
inline const char* const kNonAutomorphismText = "a->a; b->a; c->c";

inline FreeMap psi() { return parse_automorphism(kPsiText); }
inline FreeMap psi_inverse() { return parse_automorphism(kPsiInverseText); }
inline FreeMap swap_ab() { return parse_automorphism(kSwapText); }

/// Small presentations (at most 3 generators and 3 relators) for
/// enumeration cross-checks.
inline std::vector<Presentation> small_presentations() {
  const char* texts[] = {
      "gens: a",                                  // ℤ
      "gens: a b",                                // F₂
      "gens: a t; rel: TatA",                     // ℤ²
      "gens: a t; rel: Tata",                     // Klein bottle
      "gens: a t; rel: TatAA",                    // BS(1,2)
      "gens: a b; rel: abaBAB",                   // trefoil
      "gens: a b; rel: aaa; rel: bb; rel: abab",  // S₃
      "gens: a b; rel: a^4; rel: aaBB; rel: Baba",  // Q₈
      "gens: a b; rel: aa; rel: bbb; rel: ab",      // trivial group
      "gens: a b c; rel: abAB; rel: bcBC; rel: acAC",
      "gens: a b c; rel: a^2B^3; rel: cacB",
      "gens: a b c; rel: abcABC",
  };
  std::vector<Presentation> out;
  for (const char* t : texts) out.push_back(parse_presentation(t));
  return out;
}

}  // namespace fbc::testing

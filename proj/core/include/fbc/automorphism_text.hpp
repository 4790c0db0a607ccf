#pragma once

// Automorphism DSL: `a->b; b->c; c->cA`.
//
// Rules are separated by `;` or newlines. Each generator of the rank must
// appear exactly once on a left-hand side. The rank is the number of rules
// unless overridden.

#include <optional>
#include <string>
#include <string_view>

#include "fbc/free_map.hpp"

namespace fbc {

/// Throws ParseError, DuplicateRule or MissingGenerator.
FreeMap parse_automorphism(std::string_view text, std::optional<int> rank_override = std::nullopt);

/// Inverse of parse_automorphism: `a->...; b->...`.
std::string format_automorphism(const FreeMap& f);

}  // namespace fbc

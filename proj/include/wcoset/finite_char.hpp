#pragma once

#include <map>

#include "wcoset/root_system.hpp"

namespace wcoset {

// Weight multiplicities of the irreducible finite-dimensional module E_lambda
// on dominant weights only, via Freudenthal's recursion.
std::map<Weight, Int> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

// Full multiplicity table, spread over Weyl orbits.
std::map<Weight, Int> finite_character(const RootSystem& rs, const Weight& lambda);

// Same, but orbits whose norm^2 exceeds cap2 are skipped (reflections preserve
// the norm, so this prunes whole orbits exactly).
std::map<Weight, Int> finite_character_capped(const RootSystem& rs, const Weight& lambda,
                                              const Rat& cap2);

Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

}  // namespace wcoset

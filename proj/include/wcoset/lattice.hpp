#pragma once

#include <vector>

#include "wcoset/rat.hpp"

namespace wcoset {

// Integer vectors c with (c + center)^T G (c + center) <= bound, G symmetric
// positive definite rational. Fincke-Pohst recursion on an exact LDL^T
// factorization; sqrt bounds are certified rational upper bounds and the exact
// quadratic test runs on every candidate, so the output is exactly the set of
// solutions.
std::vector<std::vector<Int>> enumerate_lattice(const std::vector<std::vector<Rat>>& G,
                                                const std::vector<Rat>& center, const Rat& bound);

}  // namespace wcoset

#pragma once

#include <optional>
#include <vector>

#include "altruns/rational.hpp"

namespace altruns {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves A x = b exactly by Gauss-Jordan elimination. A may be rectangular
// (more equations than unknowns). Returns nullopt when the system is
// inconsistent; throws DomainError when it is consistent but underdetermined.
std::optional<std::vector<Rational>> solve_linear_system(RationalMatrix a,
                                                         std::vector<Rational> b);

}  // namespace altruns

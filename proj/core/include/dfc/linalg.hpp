#pragma once

#include "dfc/rational.hpp"

#include <vector>

namespace dfc {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact solve of A x = b for an m x n system with m >= n.
/// Requires full column rank and consistency; throws SingularSystemError otherwise.
std::vector<Rational> solve_exact(RationalMatrix A, std::vector<Rational> b);

/// Rank of A in exact arithmetic.
int rank_exact(RationalMatrix A);

} // namespace dfc

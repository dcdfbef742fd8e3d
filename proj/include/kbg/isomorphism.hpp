#pragma once

#include "kbg/graph.hpp"

namespace kbg {

/// Brute-force tier limit for isomorphism testing. Enough for every
/// convergence limit (K1, K3) and all fixpoint checks on small iterates.
inline constexpr int kIsoTierLimit = 10;

/// Exact isomorphism test by pruned backtracking. Throws std::invalid_argument
/// ("iso tier exceeded") when either graph has more than kIsoTierLimit vertices.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace kbg

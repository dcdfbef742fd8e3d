#pragma once

#include <cstdint>
#include <functional>

#include "kbg/graph.hpp"

namespace kbg {

/// Upper bound for exhaustive labeled-graph sweeps: 2^21 graphs at n = 7.
inline constexpr int kMaxSweepN = 7;

/// 2^(n(n-1)/2). Throws outside 1..kMaxSweepN.
uint64_t labeled_graph_count(int n);

/// Graph number `mask` on n vertices: bit k of the mask is the adjacency bit
/// of the k-th vertex pair in column order (0,1),(0,2),(1,2),(0,3),...
Graph labeled_graph_from_mask(int n, uint64_t mask);

/// Every labeled simple graph on n vertices exactly once, masks ascending.
void for_each_labeled_graph(int n, const std::function<void(const Graph&, uint64_t)>& fn);

}  // namespace kbg

#pragma once

#include <vector>

#include "kbg/graph.hpp"

namespace kbg {

/// Partition of V into maximal false-twin classes: u and v share a class
/// exactly when N(u) = N(v) (open neighborhoods). Classes are ordered by
/// their lowest member, members ascending.
std::vector<std::vector<int>> false_twin_classes(const Graph& g);

/// Tw(G): one representative (the lowest index) kept per false-twin class.
struct TwinReduction {
  std::vector<std::vector<int>> classes;
  std::vector<int> representatives;  // lowest member of each class, ascending
  Graph reduced;                     // induced on the representatives; twin-free
};

TwinReduction twin_reduce(const Graph& g);

inline bool is_twin_free(const Graph& g) {
  return static_cast<int>(false_twin_classes(g).size()) == g.vertex_count();
}

}  // namespace kbg

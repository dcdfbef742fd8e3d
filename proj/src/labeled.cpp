#include "kbg/labeled.hpp"

#include <stdexcept>

namespace kbg {

uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > kMaxSweepN)
    throw std::invalid_argument("labeled sweep supports 1 <= n <= 7");
  return uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph_from_mask(int n, uint64_t mask) {
  if (n < 1 || n > kMaxSweepN)
    throw std::invalid_argument("labeled sweep supports 1 <= n <= 7");
  Graph g(n);
  int k = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++k)
      if ((mask >> k) & 1) g.add_edge(row, col);
  return g;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&, uint64_t)>& fn) {
  uint64_t total = labeled_graph_count(n);
  for (uint64_t mask = 0; mask < total; ++mask) fn(labeled_graph_from_mask(n, mask), mask);
}

}  // namespace kbg

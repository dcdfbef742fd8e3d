#include "kbg/twins.hpp"

#include <algorithm>
#include <unordered_map>

namespace kbg {

std::vector<std::vector<int>> false_twin_classes(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> classes;
  // rows hashed into buckets, equality verified word-for-word inside a bucket
  std::unordered_map<uint64_t, std::vector<size_t>> buckets;
  buckets.reserve(static_cast<size_t>(n) * 2);
  for (int v = 0; v < n; ++v) {
    const VertexSet& row = g.neighbors(v);
    std::vector<size_t>& bucket = buckets[row.hash()];
    bool placed = false;
    for (size_t ci : bucket) {
      if (g.neighbors(classes[ci][0]) == row) {
        classes[ci].push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(classes.size());
      classes.push_back({v});
    }
  }
  // vertices were scanned in ascending order, so classes are already sorted
  // by representative and members ascending
  return classes;
}

TwinReduction twin_reduce(const Graph& g) {
  TwinReduction r;
  r.classes = false_twin_classes(g);
  r.representatives.reserve(r.classes.size());
  VertexSet keep(g.vertex_count());
  for (const std::vector<int>& cls : r.classes) {
    r.representatives.push_back(cls[0]);
    keep.set(cls[0]);
  }
  r.reduced = g.induced_subgraph(keep);
  return r;
}

}  // namespace kbg

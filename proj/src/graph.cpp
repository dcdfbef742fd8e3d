#include "kbg/graph.hpp"

namespace kbg {

Graph Graph::induced_subgraph(const VertexSet& keep) const {
  if (keep.universe() != n_)
    throw std::invalid_argument("induced_subgraph: vertex set universe mismatch");
  std::vector<int> verts = keep.members();
  Graph sub(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (adjacent(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return sub;
}

bool Graph::is_connected() const {
  if (n_ == 0) throw std::invalid_argument("is_connected: empty graph");
  VertexSet seen(n_);
  VertexSet frontier(n_);
  seen.set(0);
  frontier.set(0);
  while (!frontier.empty()) {
    VertexSet next(n_);
    for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= adj_[static_cast<size_t>(v)];
    next.subtract(seen);
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == n_;
}

bool is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] >= 0) continue;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const VertexSet& nb = g.neighbors(u);
      for (int v = nb.first(); v >= 0; v = nb.next(v)) {
        if (color[static_cast<size_t>(v)] < 0) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          stack.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace kbg

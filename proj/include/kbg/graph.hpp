#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kbg/vertexset.hpp"

namespace kbg {

/// Undirected simple graph on vertices 0..n-1 with bit-packed adjacency rows.
/// Rows store open neighborhoods: adjacency is kept symmetric and irreflexive
/// by construction. Values are immutable once built and cheap to copy for
/// n <= 64; larger graphs work the same but spill rows to the heap.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  }

  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge rejected");
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
  }

  int vertex_count() const { return n_; }
  long long edge_count() const {
    long long deg_sum = 0;
    for (const VertexSet& row : adj_) deg_sum += row.count();
    return deg_sum / 2;
  }
  bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[static_cast<size_t>(u)].next(u); v >= 0;
           v = adj_[static_cast<size_t>(u)].next(v))
        out.emplace_back(u, v);
    return out;
  }

  /// Subgraph induced on the members of keep, relabeled to 0..|keep|-1 in
  /// ascending order of the original indices.
  Graph induced_subgraph(const VertexSet& keep) const;

  /// True when one traversal from vertex 0 reaches every vertex. Rejects n=0.
  bool is_connected() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Two-colorability, components handled independently. True for n <= 1.
bool is_bipartite(const Graph& g);

}  // namespace kbg

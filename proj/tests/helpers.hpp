#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "kbg/bicliques.hpp"
#include "kbg/graph.hpp"
#include "kbg/isomorphism.hpp"

namespace kbg::test {

inline Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

// P4 0-1-2-3 plus 4 adjacent to all of it
inline Graph gem() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }

// K4 on {0,1,2,3} plus 4 adjacent to 0 and 1
inline Graph rocket() {
  return make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}});
}

// triangles {0,1,2} and {2,3,4} glued at 2
inline Graph butterfly() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// K4 minus one edge; 0 and 3 are false twins
inline Graph diamond() { return make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// K_{2,2,2}
inline Graph octahedron() {
  Graph g = complete(6);
  Graph h(6);
  for (auto [u, v] : g.edges())
    if (v != u + 3 || u > 2) h.add_edge(u, v);
  return h;
}

inline VertexSet vs(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.set(v);
  return s;
}

// ---- independent oracles, deliberately naive ----

// Every maximal induced biclique by scanning all vertex subsets: a candidate
// set must induce a connected bipartite graph whose 2-coloring is complete
// across sides, and no single vertex may be addable. Bitmask arithmetic only,
// so exhaustive sweeps to n=7 stay cheap. Usable up to ~n=20.
inline std::vector<uint64_t> brute_force_biclique_masks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adj[static_cast<size_t>(u)] |= uint64_t{1} << v;

  auto induces_complete_bipartite = [&](uint64_t mask) -> bool {
    if ((mask & (mask - 1)) == 0) return false;  // fewer than two vertices
    uint64_t low = mask & (~mask + 1);
    uint64_t side_a = low, side_b = 0, visited = low, queue = low;
    while (queue) {
      int v = std::countr_zero(queue);
      queue &= queue - 1;
      uint64_t nb = adj[static_cast<size_t>(v)] & mask;
      if (side_a & (uint64_t{1} << v)) {
        if (nb & side_a) return false;  // edge inside a side
        side_b |= nb;
      } else {
        if (nb & side_b) return false;
        side_a |= nb;
      }
      queue |= nb & ~visited;
      visited |= nb;
    }
    if (visited != mask) return false;  // not connected
    for (uint64_t rest = side_a; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (side_b & ~adj[static_cast<size_t>(v)]) return false;  // missing cross edge
    }
    for (uint64_t rest = side_b; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (side_a & ~adj[static_cast<size_t>(v)]) return false;
    }
    return true;
  };

  std::vector<uint64_t> out;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    if (!induces_complete_bipartite(mask)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((mask >> v) & 1) && induces_complete_bipartite(mask | (uint64_t{1} << v)))
        maximal = false;
    if (maximal) out.push_back(mask);
  }
  std::sort(out.begin(), out.end(), [](uint64_t a, uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    uint64_t diff = a ^ b;
    return (a & (diff & (~diff + 1))) != 0;  // owner of the lowest difference
  });
  return out;
}

inline std::vector<uint64_t> family_masks(const BicliqueFamily& f) {
  std::vector<uint64_t> out;
  out.reserve(f.items.size());
  for (const Biclique& b : f.items) {
    uint64_t mask = 0;
    for (int v = b.vertices.first(); v >= 0; v = b.vertices.next(v)) mask |= uint64_t{1} << v;
    out.push_back(mask);
  }
  return out;
}

// induced-pattern scan that leans on are_isomorphic instead of code tables
inline bool brute_force_contains_induced(const Graph& g, const Graph& model) {
  int n = g.vertex_count();
  if (n < 5) return false;
  int s[5];
  for (s[0] = 0; s[0] < n - 4; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n - 3; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n - 2; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n - 1; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            VertexSet sel(n);
            for (int i = 0; i < 5; ++i) sel.set(s[i]);
            if (are_isomorphic(g.induced_subgraph(sel), model)) return true;
          }
  return false;
}

}  // namespace kbg::test

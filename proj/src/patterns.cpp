#include "kbg/patterns.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <stdexcept>

namespace kbg {

namespace {

Graph five(std::initializer_list<std::pair<int, int>> edges) {
  Graph g(5);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// adjacency bit index of pair (i,j), i<j, in column order
int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

int code_of_5(const Graph& g, const int s[5]) {
  int code = 0;
  for (int j = 1; j < 5; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(s[i], s[j])) code |= 1 << pair_bit(i, j);
  return code;
}

// all 10-bit adjacency codes of labelings isomorphic to the model
std::bitset<1024> labeled_codes(const Graph& model) {
  std::bitset<1024> table;
  int perm[5] = {0, 1, 2, 3, 4};
  do {
    int code = 0;
    for (int j = 1; j < 5; ++j)
      for (int i = 0; i < j; ++i)
        if (model.adjacent(perm[i], perm[j])) code |= 1 << pair_bit(i, j);
    table.set(static_cast<size_t>(code));
  } while (std::next_permutation(perm, perm + 5));
  return table;
}

const std::bitset<1024>& code_table(Pattern p) {
  static const std::array<std::bitset<1024>, 5> tables = {
      labeled_codes(pattern_model(Pattern::K5)),
      labeled_codes(pattern_model(Pattern::C5)),
      labeled_codes(pattern_model(Pattern::Gem)),
      labeled_codes(pattern_model(Pattern::Rocket)),
      labeled_codes(pattern_model(Pattern::Butterfly))};
  return tables[static_cast<size_t>(p)];
}

}  // namespace

const Graph& pattern_model(Pattern p) {
  static const Graph k5 = five({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  static const Graph c5 = five({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  static const Graph gem = five({{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  static const Graph rocket = five({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}});
  static const Graph butterfly = five({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  switch (p) {
    case Pattern::K5: return k5;
    case Pattern::C5: return c5;
    case Pattern::Gem: return gem;
    case Pattern::Rocket: return rocket;
    case Pattern::Butterfly: return butterfly;
  }
  throw std::invalid_argument("unknown pattern");
}

bool contains_induced(const Graph& g, Pattern p) {
  int n = g.vertex_count();
  if (n < 5) return false;
  const std::bitset<1024>& table = code_table(p);
  int s[5];
  for (s[0] = 0; s[0] < n - 4; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n - 3; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n - 2; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n - 1; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4])
            if (table.test(static_cast<size_t>(code_of_5(g, s)))) return true;
  return false;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  int want;

  bool expand(int have, const VertexSet& cands) {
    if (have >= want) return true;
    int rem = cands.count();
    if (have + rem < want) return false;

    // greedy coloring of the candidates; the color count bounds the clique size
    std::vector<int> verts = cands.members();
    std::vector<std::pair<int, int>> colored;  // (color, vertex)
    colored.reserve(verts.size());
    std::vector<VertexSet> color_classes;
    for (int v : verts) {
      size_t c = 0;
      while (c < color_classes.size() && color_classes[c].intersects(g.neighbors(v))) ++c;
      if (c == color_classes.size()) color_classes.emplace_back(g.vertex_count());
      color_classes[c].set(v);
      colored.emplace_back(static_cast<int>(c) + 1, v);
    }
    if (have + static_cast<int>(color_classes.size()) < want) return false;
    std::stable_sort(colored.begin(), colored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    // branch on high colors first; once colors drop too low nothing can fit
    VertexSet rest = cands;
    for (size_t idx = colored.size(); idx-- > 0;) {
      auto [col, v] = colored[idx];
      if (have + col < want) return false;
      VertexSet next = rest & g.neighbors(v);
      if (expand(have + 1, next)) return true;
      rest.reset(v);
    }
    return false;
  }
};

}  // namespace

bool has_clique_of_size(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("has_clique_of_size: k >= 1 required");
  int n = g.vertex_count();
  if (k == 1) return n >= 1;
  if (k > n) return false;
  VertexSet all(n);
  all.fill();
  CliqueSearch s{g, k};
  return s.expand(0, all);
}

}  // namespace kbg

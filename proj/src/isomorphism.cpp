#include "kbg/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace kbg {

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  int n;
  std::vector<int> order;    // vertices of a, most-constrained first
  std::vector<int> map;      // a-vertex -> b-vertex, -1 unset
  std::vector<bool> used;    // b-vertex taken

  bool extend(size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      if (a.degree(u) != b.degree(w)) continue;
      bool ok = true;
      for (size_t d = 0; d < depth && ok; ++d) {
        int mapped = order[d];
        ok = a.adjacent(u, mapped) == b.adjacent(w, map[static_cast<size_t>(mapped)]);
      }
      if (!ok) continue;
      map[static_cast<size_t>(u)] = w;
      used[static_cast<size_t>(w)] = true;
      if (extend(depth + 1)) return true;
      used[static_cast<size_t>(w)] = false;
      map[static_cast<size_t>(u)] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count()) {
    if (std::max(n, b.vertex_count()) > kIsoTierLimit)
      throw std::invalid_argument("iso tier exceeded (n <= 10)");
    return false;
  }
  if (n > kIsoTierLimit) throw std::invalid_argument("iso tier exceeded (n <= 10)");
  if (a.edge_count() != b.edge_count()) return false;

  std::vector<int> da(static_cast<size_t>(n)), db(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    da[static_cast<size_t>(v)] = a.degree(v);
    db[static_cast<size_t>(v)] = b.degree(v);
  }
  {
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  IsoSearch s{a, b, n, {}, std::vector<int>(static_cast<size_t>(n), -1),
              std::vector<bool>(static_cast<size_t>(n), false)};
  s.order.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) s.order[static_cast<size_t>(v)] = v;
  // rare degrees first so mismatches are caught near the root
  std::vector<int> freq(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) ++freq[static_cast<size_t>(da[static_cast<size_t>(v)])];
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    int fx = freq[static_cast<size_t>(da[static_cast<size_t>(x)])];
    int fy = freq[static_cast<size_t>(da[static_cast<size_t>(y)])];
    if (fx != fy) return fx < fy;
    if (da[static_cast<size_t>(x)] != da[static_cast<size_t>(y)])
      return da[static_cast<size_t>(x)] > da[static_cast<size_t>(y)];
    return x < y;
  });
  return s.extend(0);
}

}  // namespace kbg

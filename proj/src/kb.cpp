#include "kbg/kb.hpp"

#include <algorithm>
#include <stdexcept>

#include "kbg/isomorphism.hpp"

namespace kbg {

Graph intersection_graph(const BicliqueFamily& f) {
  int k = static_cast<int>(f.items.size());
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (f.items[static_cast<size_t>(i)].vertices.intersects(f.items[static_cast<size_t>(j)].vertices))
        g.add_edge(i, j);
  return g;
}

KBResult kb(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("kb: empty graph");
  BicliqueFamily family = enumerate_all_bicliques(g);
  Graph graph = intersection_graph(family);
  return KBResult{std::move(graph), std::move(family)};
}

namespace {

bool same_up_to_iso(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.vertex_count() > kIsoTierLimit) return false;  // growing iterates, never a fixpoint here
  return are_isomorphic(a, b);
}

}  // namespace

Trajectory kb_power(const Graph& g, int max_steps, int vertex_budget) {
  if (g.vertex_count() < 1) throw std::invalid_argument("kb_power: empty graph");
  if (max_steps < 0) throw std::invalid_argument("kb_power: negative step count");
  if (vertex_budget < g.vertex_count())
    throw std::invalid_argument("kb_power: vertex budget below the input size");

  Trajectory t;
  t.steps.push_back(TrajectoryStep{g.vertex_count(), std::nullopt, g});
  Graph cur = g;
  if (cur.vertex_count() == 1) {
    t.outcome = Trajectory::Converged{cur, 0};
    return t;
  }
  for (int step = 1; step <= max_steps; ++step) {
    EnumResult res = enumerate_bicliques(cur, EnumLimits{vertex_budget, std::nullopt});
    if (std::holds_alternative<EnumAborted>(res)) {
      t.outcome = Trajectory::Exceeded{Trajectory::Budget::Vertices, step};
      return t;
    }
    BicliqueFamily family = std::get<BicliqueFamily>(std::move(res));
    t.steps.back().biclique_count = static_cast<long long>(family.size());
    Graph next = intersection_graph(family);
    t.steps.push_back(TrajectoryStep{next.vertex_count(), std::nullopt, next});
    if (same_up_to_iso(cur, next)) {
      t.outcome = Trajectory::Converged{next, step - 1};
      return t;
    }
    if (next.vertex_count() == 1) {
      t.outcome = Trajectory::Converged{next, step};
      return t;
    }
    cur = std::move(next);
  }
  t.outcome = Trajectory::Exceeded{Trajectory::Budget::Steps, max_steps};
  return t;
}

namespace {

LimitGraph classify_limit(const Graph& limit) {
  if (limit.vertex_count() == 1) return LimitGraph::K1;
  if (limit.vertex_count() == 3 && limit.edge_count() == 3) return LimitGraph::K3;
  throw std::logic_error("kb fixpoint other than K1 or K3");
}

}  // namespace

std::optional<Behavior> oracle_classify(const Graph& g, const OracleOptions& opts) {
  if (g.vertex_count() < 1) throw std::invalid_argument("oracle_classify: empty graph");
  if (!g.is_connected()) throw DisconnectedError();
  if (opts.vertex_budget < g.vertex_count())
    throw std::invalid_argument("oracle_classify: vertex budget below the input size");

  Graph cur = g;
  if (cur.vertex_count() == 1) return Behavior::converges(LimitGraph::K1, 0);
  long long enum_cap = opts.seven_biclique_shortcut ? std::min<long long>(opts.vertex_budget, 6)
                                                    : opts.vertex_budget;
  for (int step = 1; step <= opts.max_steps; ++step) {
    EnumResult res = enumerate_bicliques(cur, EnumLimits{enum_cap, std::nullopt});
    if (std::holds_alternative<EnumAborted>(res)) return Behavior::diverges();
    BicliqueFamily family = std::get<BicliqueFamily>(std::move(res));
    if (opts.seven_biclique_shortcut && static_cast<long long>(family.size()) >= 7)
      return Behavior::diverges();
    Graph next = intersection_graph(family);
    if (same_up_to_iso(cur, next)) return Behavior::converges(classify_limit(next), step - 1);
    if (next.vertex_count() == 1) return Behavior::converges(LimitGraph::K1, step);
    cur = std::move(next);
  }
  return std::nullopt;
}

bool kb_unchanged_by_twin_removal(const Graph& g, int v) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("twin removal: vertex out of range");

  VertexSet keep(n);
  keep.fill();
  keep.reset(v);
  Graph reduced = g.induced_subgraph(keep);

  BicliqueFamily full = enumerate_all_bicliques(g);
  BicliqueFamily dropped = enumerate_all_bicliques(reduced);

  // expected items: each biclique of g with v deleted, relabeled
  std::vector<VertexSet> expected;
  expected.reserve(full.items.size());
  for (const Biclique& b : full.items) {
    VertexSet mapped(n - 1);
    for (int w = b.vertices.first(); w >= 0; w = b.vertices.next(w)) {
      if (w == v) continue;
      mapped.set(w < v ? w : w - 1);
    }
    if (mapped.empty()) return false;  // biclique was {v} alone: cannot happen for a twin
    expected.push_back(std::move(mapped));
  }

  if (expected.size() != dropped.items.size()) return false;
  // match expected sets against the reduced family, then compare edges under
  // the matching
  std::vector<int> match(expected.size(), -1);
  for (size_t i = 0; i < expected.size(); ++i) {
    for (size_t j = 0; j < dropped.items.size(); ++j) {
      if (dropped.items[j].vertices == expected[i]) {
        if (match[i] != -1) return false;  // two g-bicliques collapsed together
        match[i] = static_cast<int>(j);
      }
    }
    if (match[i] == -1) return false;
  }
  {
    std::vector<int> sorted = match;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) return false;
  }
  Graph kb_full = intersection_graph(full);
  Graph kb_dropped = intersection_graph(dropped);
  int k = kb_full.vertex_count();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (kb_full.adjacent(i, j) !=
          kb_dropped.adjacent(match[static_cast<size_t>(i)], match[static_cast<size_t>(j)]))
        return false;
  return true;
}

}  // namespace kbg

#include "kbg/decide.hpp"

#include <algorithm>
#include <stdexcept>

#include "kbg/twins.hpp"

namespace kbg {

namespace {

constexpr int kTwinFreeDivergenceOrder = 13;  // twin-free on >= 13 vertices diverges
constexpr int kConvergentReductionCap = 4;    // convergent iff |Tw(KB(G))| <= 4

Behavior converged_behavior(const Graph& g) {
  // convergent trajectories stabilize within 3 steps on iterates of at most
  // 6 vertices, so a step budget of 4 and a slack vertex budget always land
  Trajectory t = kb_power(g, 4, std::max(g.vertex_count(), 8));
  const Trajectory::Converged* c = t.converged();
  if (c == nullptr) throw std::logic_error("decide: expected convergent trajectory");
  LimitGraph limit;
  if (c->limit.vertex_count() == 1) {
    limit = LimitGraph::K1;
  } else if (c->limit.vertex_count() == 3 && c->limit.edge_count() == 3) {
    limit = LimitGraph::K3;
  } else {
    throw std::logic_error("decide: kb fixpoint other than K1 or K3");
  }
  return Behavior::converges(limit, c->at_step);
}

bool complete(const Graph& g) {
  long long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

Behavior decide_quartic_connected(const Graph& g) {
  EnumResult res = enumerate_bicliques(g, EnumLimits{std::nullopt, 4});
  if (std::holds_alternative<EnumAborted>(res)) return Behavior::diverges();
  Graph kb_graph = intersection_graph(std::get<BicliqueFamily>(res));
  TwinReduction tw = twin_reduce(kb_graph);
  if (tw.reduced.vertex_count() > kConvergentReductionCap) return Behavior::diverges();
  if (!complete(tw.reduced)) throw std::logic_error("decide: Tw(KB(G)) small but not complete");
  return converged_behavior(g);
}

}  // namespace

Behavior decide_quartic(const Graph& g) {
  if (g.vertex_count() < 1) throw std::invalid_argument("decide: empty graph");
  if (!g.is_connected()) throw DisconnectedError();
  return decide_quartic_connected(g);
}

Behavior decide_linear(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("decide: empty graph");
  if (!g.is_connected()) throw DisconnectedError();

  std::vector<std::vector<int>> classes = false_twin_classes(g);
  if (static_cast<int>(classes.size()) >= kTwinFreeDivergenceOrder) return Behavior::diverges();

  VertexSet keep(n);
  for (const std::vector<int>& cls : classes) keep.set(cls[0]);
  Graph reduced = g.induced_subgraph(keep);

  Behavior on_reduced = decide_quartic_connected(reduced);
  if (on_reduced.verdict == Verdict::Diverges) return on_reduced;

  // steps are counted from g, not from Tw(g): the two trajectories share
  // every iterate from step 1 on, so only a step-0 fixpoint needs care
  if (n == 1) return Behavior::converges(LimitGraph::K1, 0);
  if (n == 3 && g.edge_count() == 3) return Behavior::converges(LimitGraph::K3, 0);
  if (*on_reduced.steps == 0) return Behavior::converges(*on_reduced.limit, 1);
  return on_reduced;
}

Behavior decide(const Graph& g, Method method) {
  switch (method) {
    case Method::Linear:
      return decide_linear(g);
    case Method::Quartic:
      return decide_quartic(g);
    case Method::Oracle: {
      if (g.vertex_count() < 1) throw std::invalid_argument("decide: empty graph");
      std::optional<Behavior> b = oracle_classify(g);
      if (!b) throw std::runtime_error("oracle budgets exhausted without a verdict");
      return *b;
    }
  }
  throw std::invalid_argument("decide: unknown method");
}

}  // namespace kbg

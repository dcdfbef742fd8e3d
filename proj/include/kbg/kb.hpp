#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "kbg/bicliques.hpp"
#include "kbg/graph.hpp"

namespace kbg {

/// KB(G) together with the biclique family that defines it: vertex i of
/// `graph` is family item i, edges join intersecting bicliques.
struct KBResult {
  Graph graph;
  BicliqueFamily family;
};

/// Intersection graph of the family, vertex order = family order.
Graph intersection_graph(const BicliqueFamily& f);

/// Biclique graph of g. Rejects the empty graph; KB(K1) is the 0-vertex graph.
KBResult kb(const Graph& g);

struct TrajectoryStep {
  int vertex_count = 0;
  std::optional<long long> biclique_count;  // unknown when enumeration was cut short
  Graph graph;
};

/// Record of iterating KB from a start graph. Steps are consecutive from
/// step 0 = the input. Converged{limit, k} means step k already behaves as
/// the limit: either step k+1 was computed isomorphic to step k, or step k
/// is K1, which is a fixpoint by convention.
struct Trajectory {
  enum class Budget { Vertices, Steps };
  struct Converged {
    Graph limit;
    int at_step;
  };
  struct Exceeded {
    Budget which;
    int at_step;  // the step that went over
  };

  std::vector<TrajectoryStep> steps;
  std::variant<Converged, Exceeded> outcome;

  const Converged* converged() const { return std::get_if<Converged>(&outcome); }
  const Exceeded* exceeded() const { return std::get_if<Exceeded>(&outcome); }
};

/// Apply KB up to max_steps times, stopping early on a fixpoint (isomorphism)
/// or when an iterate would exceed vertex_budget vertices.
/// Requires max_steps >= 0 and vertex_budget >= |V(g)| >= 1.
Trajectory kb_power(const Graph& g, int max_steps, int vertex_budget);

enum class LimitGraph { K1, K3 };

enum class Verdict { Converges, Diverges };

/// Classification of a graph under iterated KB. Convergent graphs reach K1 or
/// K3 in at most 3 steps, counted from the input graph.
struct Behavior {
  Verdict verdict;
  std::optional<LimitGraph> limit;  // set iff Converges
  std::optional<int> steps;         // set iff Converges

  bool operator==(const Behavior&) const = default;

  static Behavior diverges() { return {Verdict::Diverges, std::nullopt, std::nullopt}; }
  static Behavior converges(LimitGraph limit, int steps) { return {Verdict::Converges, limit, steps}; }
};

struct OracleOptions {
  int max_steps = 8;
  int vertex_budget = 200;
  /// Stop declaring divergence as soon as an iterate has at least seven
  /// bicliques (seven bicliques force divergence). Disable to classify by
  /// budget simulation alone.
  bool seven_biclique_shortcut = true;
};

/// Thrown by classifiers handed a disconnected graph.
struct DisconnectedError : std::invalid_argument {
  DisconnectedError() : std::invalid_argument("graph is disconnected") {}
};

/// Classify by direct simulation. Exceeding the vertex budget certifies
/// divergence (iterate growth past any fixed size only happens on divergent
/// graphs at these budgets); a fixpoint certifies convergence. Returns
/// nullopt when the step budget runs out undecided, which no connected input
/// is known to produce. Requires a connected graph.
std::optional<Behavior> oracle_classify(const Graph& g, const OracleOptions& opts = {});

/// True when deleting false-twin vertex v leaves the biclique family
/// unchanged apart from dropping v: the families correspond as vertex sets
/// and the intersection pattern is identical, which exhibits a concrete
/// isomorphism KB(g) = KB(g - v).
bool kb_unchanged_by_twin_removal(const Graph& g, int v);

}  // namespace kbg

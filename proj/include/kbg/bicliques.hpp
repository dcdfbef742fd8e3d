#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "kbg/graph.hpp"

namespace kbg {

/// One maximal induced complete bipartite subgraph. Both sides are non-empty
/// independent sets with every cross edge present, and no outside vertex can
/// join either side. side_a holds the lowest vertex, making values canonical.
struct Biclique {
  VertexSet vertices;
  VertexSet side_a;
  VertexSet side_b;

  bool operator==(const Biclique&) const = default;
};

/// All bicliques of a graph, sorted by (size, lexicographic vertex set).
/// Vertex i of the biclique graph corresponds to items[i].
struct BicliqueFamily {
  Graph owner;
  std::vector<Biclique> items;

  size_t size() const { return items.size(); }
};

struct EnumLimits {
  std::optional<long long> total;  // abort once more than this many are found
  std::optional<int> per_vertex;   // abort once some vertex exceeds this count
};

struct EnumAborted {
  enum class Which { Total, PerVertex };
  Which which;
  int vertex;       // offending vertex for PerVertex, -1 for Total
  long long found;  // bicliques found when the threshold fired
};

using EnumResult = std::variant<BicliqueFamily, EnumAborted>;

/// Enumerate every maximal induced biclique. Deterministic output; an abort
/// is a first-class outcome used by the deciders, not a failure. The worst
/// case is exponential (biclique counts can be), which the limits cap.
/// Rejects the empty graph.
EnumResult enumerate_bicliques(const Graph& g, const EnumLimits& limits = {});

/// Unlimited enumeration, always a family.
BicliqueFamily enumerate_all_bicliques(const Graph& g);

/// Membership, independence of both sides, completeness between them, and
/// maximality against every outside vertex.
bool is_induced_biclique(const Graph& g, const VertexSet& a, const VertexSet& b);

/// count[v] = number of bicliques containing v.
std::vector<int> per_vertex_incidence(const BicliqueFamily& f);

/// Thread-local instrumentation, reset explicitly by tests and cost guards.
struct EnumCounters {
  long long calls = 0;
  int max_vertex_count = 0;
};
EnumCounters& enum_counters();
void reset_enum_counters();

}  // namespace kbg

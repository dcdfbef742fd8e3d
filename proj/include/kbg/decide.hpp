#pragma once

#include "kbg/kb.hpp"

namespace kbg {

enum class Method { Linear, Quartic, Oracle };

/// O(n^4)-style decision: enumerate bicliques aborting once any vertex lies
/// in five (that alone forces K5 inside KB(G), hence divergence); otherwise
/// G converges exactly when Tw(KB(G)) has at most four vertices, and the
/// reduction is then a complete graph. Limit and step count for convergent
/// inputs come from running the iteration, which is constant work there.
/// Requires a connected graph.
Behavior decide_quartic(const Graph& g);

/// Linear-time decision: build the false-twin classes of g; at least 13
/// classes certifies divergence with no biclique enumeration at all, since
/// twin-free graphs on 13+ vertices have at least 7 bicliques and 7 bicliques
/// force divergence. Otherwise decide on the reduced graph Tw(g) (at most 12
/// vertices, constant work); twin deletion changes neither KB nor the
/// behavior. Requires a connected graph.
Behavior decide_linear(const Graph& g);

/// Dispatch to one of the three deciders. All agree on every connected input.
Behavior decide(const Graph& g, Method method);

}  // namespace kbg

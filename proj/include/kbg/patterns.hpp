#pragma once

#include "kbg/graph.hpp"

namespace kbg {

/// The five order-5 obstruction patterns. A graph whose biclique graph
/// contains K5, the gem or the rocket diverges under the biclique operator;
/// C5 and the butterfly matter because K5 sits inside their biclique graphs.
enum class Pattern { K5, C5, Gem, Rocket, Butterfly };

/// Fixed 5-vertex model of a pattern:
///   Gem       P4 (0-1-2-3) plus 4 adjacent to all of it
///   Rocket    K4 on {0,1,2,3} plus 4 adjacent to 0 and 1
///   Butterfly triangles {0,1,2} and {2,3,4} glued at 2
const Graph& pattern_model(Pattern p);

/// True when some 5-subset of V(g) induces the pattern. Subset scan with an
/// O(1) canonical-code lookup per subset; meant for the small graphs the
/// deciders and the harness produce.
bool contains_induced(const Graph& g, Pattern p);

/// Exact k-clique test, branch and bound with a greedy coloring bound.
bool has_clique_of_size(const Graph& g, int k);

}  // namespace kbg

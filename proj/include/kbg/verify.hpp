#pragma once

#include <string>
#include <vector>

#include "kbg/graph.hpp"

namespace kbg {

struct Violation {
  int n = 0;
  std::string graph6;
  std::string property;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct PerNStats {
  int n = 0;
  long long labeled = 0;
  long long connected = 0;
  long long divergent = 0;
  long long convergent = 0;
};

/// Outcome of a verification sweep. Two runs over the same range produce
/// identical reports apart from elapsed_ms.
struct RunReport {
  int schema = 1;
  int max_n = 0;
  long long labeled_scanned = 0;
  long long connected_scanned = 0;
  long long divergent = 0;
  long long convergent = 0;
  std::vector<PerNStats> per_n;
  std::vector<Violation> violations;
  double elapsed_ms = 0.0;

  bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
  int max_n = 7;  // 1..7
  int jobs = 0;   // <= 0 picks the hardware concurrency
};

/// Sweep every labeled graph with up to max_n vertices. Each graph must
/// survive the graph6 round trip; each connected one is checked for:
///   - the linear, quartic and simulation classifiers agree (simulation run
///     without the seven-biclique shortcut),
///   - at least 7 bicliques implies divergence,
///   - convergent graphs reach their limit within 3 steps,
///   - false-twin classes coincide with non-adjacent swappable pairs,
///   - KB is unchanged by deleting any false twin (graphs up to 6 vertices),
///   - twin-free graphs on n >= 2 vertices have at least ceil(n/2) bicliques
///     and some vertex whose removal keeps the graph twin-free,
///   - a vertex in 5 or more bicliques forces K5 inside KB,
///   - no KB output is bipartite with more than two vertices.
/// Violations are data, not errors; the report carries them all.
RunReport exhaustive_verify(const VerifyOptions& opts = {});

}  // namespace kbg

#include "kbg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "kbg/decide.hpp"
#include "kbg/io.hpp"
#include "kbg/labeled.hpp"
#include "kbg/patterns.hpp"
#include "kbg/twins.hpp"

namespace kbg {

namespace {

std::string describe(const Behavior& b) {
  if (b.verdict == Verdict::Diverges) return "diverges";
  std::ostringstream os;
  os << "converges limit=" << (*b.limit == LimitGraph::K1 ? "K1" : "K3") << " steps=" << *b.steps;
  return os.str();
}

// Smallest upper-triangle bitmask over every degree-ascending relabeling,
// tagged with n. Isomorphisms preserve degrees, so minimizing over only the
// degree-respecting arrangements is still a canonical form; it shrinks the
// search to the product of factorials of the degree-class sizes (the full n!
// survives only on regular graphs).
uint64_t canonical_code(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> arr(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) arr[static_cast<size_t>(i)] = i;
  std::sort(arr.begin(), arr.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<std::pair<size_t, size_t>> classes;  // [begin, end) runs of equal degree
  for (size_t i = 0; i < arr.size();) {
    size_t j = i + 1;
    while (j < arr.size() && g.degree(arr[j]) == g.degree(arr[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  uint64_t best = ~uint64_t{0};
  while (true) {
    uint64_t code = 0;
    int k = 0;
    for (int col = 1; col < n; ++col)
      for (int row = 0; row < col; ++row, ++k)
        if (g.adjacent(arr[static_cast<size_t>(row)], arr[static_cast<size_t>(col)]))
          code |= uint64_t{1} << k;
    best = std::min(best, code);
    // mixed-radix advance; a wrapped class is left re-sorted by
    // next_permutation and the next class steps forward
    size_t ci = 0;
    while (ci < classes.size() &&
           !std::next_permutation(arr.begin() + static_cast<long>(classes[ci].first),
                                  arr.begin() + static_cast<long>(classes[ci].second)))
      ++ci;
    if (ci == classes.size()) break;
  }
  return (static_cast<uint64_t>(n) << 56) | best;
}

// The budget simulation is isomorphism-invariant (iterate sizes, fixpoint
// detection and step counts survive relabeling), so the sweep runs it once
// per isomorphism class and replays the verdict. A deterministic sample of
// labeled graphs re-runs the raw simulation against the replayed verdict.
class OracleMemo {
 public:
  std::optional<Behavior> classify(const Graph& g, const OracleOptions& opts) {
    uint64_t key = canonical_code(g);
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    std::optional<Behavior> verdict = oracle_classify(g, opts);
    std::unique_lock lock(mutex_);
    cache_.emplace(key, verdict);
    return verdict;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<uint64_t, std::optional<Behavior>> cache_;
};

struct Tally {
  long long connected = 0;
  long long divergent = 0;
  long long convergent = 0;
  std::vector<Violation> violations;
};

void check_connected_graph(const Graph& g, int n, bool raw_oracle_sample, OracleMemo& memo,
                           Tally& tally) {
  auto fail = [&](const char* property, std::string detail) {
    tally.violations.push_back(Violation{n, to_graph6(g), property, std::move(detail)});
  };
  try {
    const OracleOptions plain{8, 200, false};
    Behavior lin = decide_linear(g);
    Behavior qua = decide_quartic(g);
    std::optional<Behavior> orc = memo.classify(g, plain);
    if (raw_oracle_sample) {
      std::optional<Behavior> raw = oracle_classify(g, plain);
      if (raw != orc)
        fail("oracle-memo", "replayed verdict differs from the raw simulation");
    }
    if (!orc) {
      fail("decider-agreement", "oracle undecided within budgets");
    } else if (!(lin == qua && qua == *orc)) {
      fail("decider-agreement", "linear=" + describe(lin) + " quartic=" + describe(qua) +
                                    " oracle=" + describe(*orc));
    }
    (lin.verdict == Verdict::Diverges ? tally.divergent : tally.convergent) += 1;

    BicliqueFamily family = enumerate_all_bicliques(g);
    long long bicliques = static_cast<long long>(family.size());
    if (bicliques >= 7 && lin.verdict != Verdict::Diverges)
      fail("seven-bicliques", std::to_string(bicliques) + " bicliques yet classified convergent");
    if (lin.verdict == Verdict::Converges && *lin.steps > 3)
      fail("limit-within-3-steps", "steps=" + std::to_string(*lin.steps));

    Graph kb_graph = intersection_graph(family);
    std::vector<int> incidence = per_vertex_incidence(family);
    int max_incidence = incidence.empty() ? 0 : *std::max_element(incidence.begin(), incidence.end());
    if (max_incidence >= 5 && !has_clique_of_size(kb_graph, 5))
      fail("five-incidence-k5", "incidence=" + std::to_string(max_incidence) + " but no K5 in KB");
    if (kb_graph.vertex_count() >= 3 && is_bipartite(kb_graph))
      fail("bipartite-kb", "KB on " + std::to_string(kb_graph.vertex_count()) + " vertices is bipartite");

    std::vector<std::vector<int>> classes = false_twin_classes(g);
    {
      // sharing a class must coincide with "swapping the pair is an
      // automorphism fixing the rest, and the pair is non-adjacent"
      std::vector<int> class_of(static_cast<size_t>(n), -1);
      for (size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) class_of[static_cast<size_t>(v)] = static_cast<int>(c);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          bool swap_auto = !g.adjacent(u, v);
          for (int w = 0; w < n && swap_auto; ++w)
            if (w != u && w != v) swap_auto = g.adjacent(u, w) == g.adjacent(v, w);
          if (swap_auto != (class_of[static_cast<size_t>(u)] == class_of[static_cast<size_t>(v)]))
            fail("twin-swap", "pair " + std::to_string(u) + "," + std::to_string(v));
        }
      }
    }
    bool twin_free = static_cast<int>(classes.size()) == n;
    if (twin_free && n >= 2) {
      if (bicliques < (n + 1) / 2)
        fail("biclique-lower-bound",
             std::to_string(bicliques) + " bicliques < ceil(" + std::to_string(n) + "/2)");
      bool has_sumner_vertex = false;
      for (int v = 0; v < n && !has_sumner_vertex; ++v) {
        VertexSet keep(n);
        keep.fill();
        keep.reset(v);
        has_sumner_vertex = is_twin_free(g.induced_subgraph(keep));
      }
      if (!has_sumner_vertex) fail("sumner-step", "every single-vertex removal creates twins");
    }
    if (n <= 6) {
      for (const std::vector<int>& cls : classes) {
        if (cls.size() < 2) continue;
        for (int v : cls)
          if (!kb_unchanged_by_twin_removal(g, v))
            fail("twin-invariance", "KB changed by deleting twin vertex " + std::to_string(v));
      }
    }
  } catch (const std::exception& e) {
    fail("exception", e.what());
  }
}

}  // namespace

RunReport exhaustive_verify(const VerifyOptions& opts) {
  if (opts.max_n < 1 || opts.max_n > kMaxSweepN)
    throw std::invalid_argument("exhaustive_verify: max_n must be in 1..7");
  auto started = std::chrono::steady_clock::now();

  RunReport report;
  report.max_n = opts.max_n;

  int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  std::mutex merge_mutex;
  OracleMemo memo;
  for (int n = 1; n <= opts.max_n; ++n) {
    uint64_t total = labeled_graph_count(n);
    report.labeled_scanned += static_cast<long long>(total);
    PerNStats stats;
    stats.n = n;
    stats.labeled = static_cast<long long>(total);

    std::atomic<uint64_t> next_chunk{0};
    const uint64_t chunk = 4096;
    int workers = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(jobs), (total + chunk - 1) / chunk));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, n]() {
        Tally local;
        while (true) {
          uint64_t begin = next_chunk.fetch_add(chunk);
          if (begin >= total) break;
          uint64_t end = std::min(begin + chunk, total);
          for (uint64_t mask = begin; mask < end; ++mask) {
            Graph g = labeled_graph_from_mask(n, mask);
            if (parse_graph6(to_graph6(g)) != g)
              local.violations.push_back(
                  Violation{n, to_graph6(g), "graph6-roundtrip", "decode(encode) differs"});
            if (!g.is_connected()) continue;
            ++local.connected;
            check_connected_graph(g, n, mask % 1009 == 0, memo, local);
          }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        stats.connected += local.connected;
        stats.divergent += local.divergent;
        stats.convergent += local.convergent;
        report.violations.insert(report.violations.end(),
                                 std::make_move_iterator(local.violations.begin()),
                                 std::make_move_iterator(local.violations.end()));
      });
    }
    for (std::thread& t : pool) t.join();

    report.connected_scanned += stats.connected;
    report.divergent += stats.divergent;
    report.convergent += stats.convergent;
    report.per_n.push_back(stats);
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.n, a.graph6, a.property, a.detail) <
                     std::tie(b.n, b.graph6, b.property, b.detail);
            });
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace kbg

#include "kbg/bicliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace kbg {

namespace {

// Bron-Kerbosch with pivoting over side-tagged vertices: an A-copy of u is
// compatible with A-copies of its non-neighbors and B-copies of its
// neighbors. Each search is anchored at one edge (u, v) taken as "u is the
// lowest vertex of the biclique and sits in side A, v is the lowest vertex
// of side B": candidates are restricted to higher indices and the excluded
// sets start holding the lower ones, so every maximal biclique is reported
// exactly once, from its own anchor, with maximality checked against the
// whole graph. Both sides stay inhabited throughout, which keeps plain
// independent sets (one side empty) out of the search space.
struct BicliqueSearch {
  const Graph& g;
  const EnumLimits& limits;
  std::vector<Biclique> out;
  std::vector<int> incidence;  // maintained only under a per-vertex limit
  EnumAborted abort{EnumAborted::Which::Total, -1, 0};
  bool aborted = false;

  bool emit(const VertexSet& a, const VertexSet& b) {
    out.push_back(Biclique{a | b, a, b});
    if (limits.per_vertex) {
      const VertexSet& verts = out.back().vertices;
      for (int v = verts.first(); v >= 0; v = verts.next(v)) {
        if (++incidence[static_cast<size_t>(v)] > *limits.per_vertex) {
          abort = {EnumAborted::Which::PerVertex, v, static_cast<long long>(out.size())};
          aborted = true;
          return false;
        }
      }
    }
    if (limits.total && static_cast<long long>(out.size()) > *limits.total) {
      abort = {EnumAborted::Which::Total, -1, static_cast<long long>(out.size())};
      aborted = true;
      return false;
    }
    return true;
  }

  bool run(const VertexSet& a, const VertexSet& b, VertexSet pa, VertexSet pb, VertexSet xa,
           VertexSet xb) {
    if (pa.empty() && pb.empty() && xa.empty() && xb.empty()) return emit(a, b);

    // pivot maximizing how much of the candidate set it dominates
    int pa_cnt = pa.count(), pb_cnt = pb.count();
    int best = -1, pivot = -1;
    bool pivot_in_a = true;
    VertexSet cands_a = pa | xa;
    for (int u = cands_a.first(); u >= 0; u = cands_a.next(u)) {
      const VertexSet& nb = g.neighbors(u);
      int score = pa_cnt - pa.intersection_count(nb) - (pa.test(u) ? 1 : 0) +
                  pb.intersection_count(nb);
      if (score > best) {
        best = score;
        pivot = u;
        pivot_in_a = true;
      }
    }
    VertexSet cands_b = pb | xb;
    for (int u = cands_b.first(); u >= 0; u = cands_b.next(u)) {
      const VertexSet& nb = g.neighbors(u);
      int score = pb_cnt - pb.intersection_count(nb) - (pb.test(u) ? 1 : 0) +
                  pa.intersection_count(nb);
      if (score > best) {
        best = score;
        pivot = u;
        pivot_in_a = false;
      }
    }

    const VertexSet& pnb = g.neighbors(pivot);
    VertexSet ext_a = pivot_in_a ? (pa & pnb) : pa;
    if (pivot_in_a) {
      if (pa.test(pivot)) ext_a.set(pivot);
    } else {
      ext_a.subtract(pnb);
    }
    VertexSet ext_b = pivot_in_a ? pb : (pb & pnb);
    if (pivot_in_a) {
      ext_b.subtract(pnb);
    } else {
      if (pb.test(pivot)) ext_b.set(pivot);
    }

    for (int v = ext_a.first(); v >= 0; v = ext_a.next(v)) {
      const VertexSet& nb = g.neighbors(v);
      VertexSet a2 = a;
      a2.set(v);
      VertexSet pa2 = pa, xa2 = xa;
      pa2.subtract(nb);
      pa2.reset(v);
      xa2.subtract(nb);
      xa2.reset(v);
      if (!run(a2, b, std::move(pa2), pb & nb, std::move(xa2), xb & nb)) return false;
      pa.reset(v);
      xa.set(v);
    }
    for (int v = ext_b.first(); v >= 0; v = ext_b.next(v)) {
      const VertexSet& nb = g.neighbors(v);
      VertexSet b2 = b;
      b2.set(v);
      VertexSet pb2 = pb, xb2 = xb;
      pb2.subtract(nb);
      pb2.reset(v);
      xb2.subtract(nb);
      xb2.reset(v);
      if (!run(a, b2, pa & nb, std::move(pb2), xa & nb, std::move(xb2))) return false;
      pb.reset(v);
      xb.set(v);
    }
    return true;
  }
};

}  // namespace

EnumResult enumerate_bicliques(const Graph& g, const EnumLimits& limits) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("enumerate_bicliques: empty graph");
  EnumCounters& counters = enum_counters();
  ++counters.calls;
  counters.max_vertex_count = std::max(counters.max_vertex_count, n);

  BicliqueSearch search{g, limits, {}, {}, {EnumAborted::Which::Total, -1, 0}, false};
  if (limits.per_vertex) {
    if (*limits.per_vertex < 0) throw std::invalid_argument("per-vertex limit must be >= 0");
    search.incidence.assign(static_cast<size_t>(n), 0);
  }
  if (limits.total && *limits.total < 0) throw std::invalid_argument("total limit must be >= 0");

  // anchors in lexicographic edge order
  for (int u = 0; u < n && !search.aborted; ++u) {
    const VertexSet& nu = g.neighbors(u);
    for (int v = nu.next(u); v >= 0 && !search.aborted; v = nu.next(v)) {
      const VertexSet& nv = g.neighbors(v);
      VertexSet a(n), b(n);
      a.set(u);
      b.set(v);
      VertexSet base_a = nv;  // joins side A: non-adjacent to u, adjacent to v
      base_a.subtract(nu);
      base_a.reset(u);
      VertexSet base_b = nu;  // joins side B: adjacent to u, non-adjacent to v
      base_b.subtract(nv);
      base_b.reset(v);
      VertexSet pa = base_a;
      pa.keep_above(u);
      base_a.keep_below(u);  // becomes the excluded set
      VertexSet pb = base_b;
      pb.keep_above(v);
      base_b.keep_below(v);
      search.run(a, b, std::move(pa), std::move(pb), std::move(base_a), std::move(base_b));
    }
  }
  if (search.aborted) return search.abort;

  std::sort(search.out.begin(), search.out.end(), [](const Biclique& l, const Biclique& r) {
    return VertexSet::size_lex_less(l.vertices, r.vertices);
  });
  return BicliqueFamily{g, std::move(search.out)};
}

BicliqueFamily enumerate_all_bicliques(const Graph& g) {
  return std::get<BicliqueFamily>(enumerate_bicliques(g));
}

bool is_induced_biclique(const Graph& g, const VertexSet& a, const VertexSet& b) {
  int n = g.vertex_count();
  if (a.universe() != n || b.universe() != n)
    throw std::invalid_argument("is_induced_biclique: universe mismatch");
  if (a.empty() || b.empty() || a.intersects(b)) return false;
  for (int u = a.first(); u >= 0; u = a.next(u)) {
    const VertexSet& nb = g.neighbors(u);
    if (nb.intersects(a)) return false;    // side must be independent
    if (!b.is_subset_of(nb)) return false; // every cross edge present
  }
  for (int v = b.first(); v >= 0; v = b.next(v))
    if (g.neighbors(v).intersects(b)) return false;
  for (int w = 0; w < n; ++w) {
    if (a.test(w) || b.test(w)) continue;
    const VertexSet& nb = g.neighbors(w);
    if (!nb.intersects(a) && b.is_subset_of(nb)) return false;  // w extends side a
    if (!nb.intersects(b) && a.is_subset_of(nb)) return false;  // w extends side b
  }
  return true;
}

std::vector<int> per_vertex_incidence(const BicliqueFamily& f) {
  std::vector<int> counts(static_cast<size_t>(f.owner.vertex_count()), 0);
  for (const Biclique& b : f.items)
    for (int v = b.vertices.first(); v >= 0; v = b.vertices.next(v))
      ++counts[static_cast<size_t>(v)];
  return counts;
}

EnumCounters& enum_counters() {
  thread_local EnumCounters counters;
  return counters;
}

void reset_enum_counters() { enum_counters() = EnumCounters{}; }

}  // namespace kbg

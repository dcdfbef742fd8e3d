#include <doctest.h>

#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "helpers.hpp"
#include "kbg/bicliques.hpp"
#include "kbg/labeled.hpp"
#include "kbg/twins.hpp"

using namespace kbg;
using namespace kbg::test;

namespace {

std::set<std::vector<int>> family_as_lists(const BicliqueFamily& f) {
  std::set<std::vector<int>> out;
  for (const Biclique& b : f.items) out.insert(b.vertices.members());
  return out;
}

void check_family_is_valid(const Graph& g, const BicliqueFamily& f) {
  std::set<std::vector<int>> seen;
  for (const Biclique& b : f.items) {
    CHECK(is_induced_biclique(g, b.side_a, b.side_b));
    CHECK((b.side_a | b.side_b) == b.vertices);
    CHECK_FALSE(b.side_a.intersects(b.side_b));
    CHECK(b.side_a.test(b.vertices.first()));  // canonical orientation
    CHECK(seen.insert(b.vertices.members()).second);
  }
}

}  // namespace

TEST_CASE("is_induced_biclique on the named examples") {
  Graph c5 = cycle(5);
  CHECK(is_induced_biclique(c5, vs(5, {1}), vs(5, {0, 2})));
  CHECK(is_induced_biclique(complete(3), vs(3, {0}), vs(3, {1})));
  CHECK_FALSE(is_induced_biclique(cycle(4), vs(4, {0}), vs(4, {1, 3})));  // extends by 2
  CHECK_FALSE(is_induced_biclique(c5, vs(5, {0}), vs(5, {0, 1})));        // overlap
  CHECK_FALSE(is_induced_biclique(c5, vs(5, {}), vs(5, {1})));            // empty side
  CHECK_FALSE(is_induced_biclique(c5, vs(5, {0}), vs(5, {2})));           // missing cross edge
  CHECK_FALSE(is_induced_biclique(complete(3), vs(3, {0, 1}), vs(3, {2})));  // side not independent
}

TEST_CASE("families of the named graphs") {
  BicliqueFamily c5 = enumerate_all_bicliques(cycle(5));
  REQUIRE(c5.size() == 5);
  for (const Biclique& b : c5.items) CHECK(b.vertices.count() == 3);  // consecutive triples

  CHECK(enumerate_all_bicliques(gem()).size() == 5);
  CHECK(enumerate_all_bicliques(Graph(1)).size() == 0);
  CHECK(enumerate_all_bicliques(path(3)).size() == 1);
  CHECK(enumerate_all_bicliques(path(4)).size() == 2);
  CHECK(enumerate_all_bicliques(complete(3)).size() == 3);
  CHECK(enumerate_all_bicliques(diamond()).size() == 3);
  CHECK(enumerate_all_bicliques(complete_bipartite(3, 3)).size() == 1);
  CHECK(enumerate_all_bicliques(complete(4)).size() == 6);
  CHECK(enumerate_all_bicliques(cycle(7)).size() == 7);

  // butterfly: four stars through the cut vertex plus the two outer edges
  BicliqueFamily bf = enumerate_all_bicliques(butterfly());
  auto lists = family_as_lists(bf);
  std::set<std::vector<int>> expected{{0, 1}, {3, 4}, {0, 2, 3}, {0, 2, 4}, {1, 2, 3}, {1, 2, 4}};
  CHECK(lists == expected);
}

TEST_CASE("enumeration agrees with the subset-scan oracle, full validity to n=5") {
  // every family item re-validated against the definition, plus oracle set
  // equality, over all labeled graphs
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g, uint64_t) {
      BicliqueFamily f = enumerate_all_bicliques(g);
      check_family_is_valid(g, f);
      CHECK(family_masks(f) == brute_force_biclique_masks(g));
    });
  }
}

TEST_CASE("enumeration agrees with the subset-scan oracle exhaustively to n=7") {
  // set equality only, split across workers; disconnected graphs included
  for (int n = 6; n <= 7; ++n) {
    uint64_t total = labeled_graph_count(n);
    std::atomic<uint64_t> mismatches{0};
    std::atomic<uint64_t> scanned{0};
    auto worker = [&](uint64_t begin, uint64_t stride) {
      for (uint64_t mask = begin; mask < total; mask += stride) {
        Graph g = labeled_graph_from_mask(n, mask);
        if (family_masks(enumerate_all_bicliques(g)) != brute_force_biclique_masks(g))
          ++mismatches;
        ++scanned;
      }
    };
    std::thread t0(worker, 0, 2), t1(worker, 1, 2);
    t0.join();
    t1.join();
    CHECK(scanned == total);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("every edge lies in a biclique; every biclique has an edge") {
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) g.add_edge(i, j);
    BicliqueFamily f = enumerate_all_bicliques(g);
    for (const Biclique& b : f.items) CHECK(b.side_a.count() * b.side_b.count() >= 1);
    for (auto [u, v] : g.edges()) {
      bool covered = false;
      for (const Biclique& b : f.items)
        if (b.vertices.test(u) && b.vertices.test(v) &&
            b.side_a.test(u) != b.side_a.test(v)) {
          covered = true;
          break;
        }
      CHECK(covered);
    }
  }
}

TEST_CASE("per-vertex incidence") {
  BicliqueFamily c5 = enumerate_all_bicliques(cycle(5));
  for (int c : per_vertex_incidence(c5)) CHECK(c == 3);
  BicliqueFamily k3 = enumerate_all_bicliques(complete(3));
  for (int c : per_vertex_incidence(k3)) CHECK(c == 2);
  BicliqueFamily p3 = enumerate_all_bicliques(path(3));
  for (int c : per_vertex_incidence(p3)) CHECK(c == 1);

  // total incidence equals total biclique size
  std::mt19937 rng(8);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1) g.add_edge(i, j);
    BicliqueFamily f = enumerate_all_bicliques(g);
    std::vector<int> inc = per_vertex_incidence(f);
    long long inc_sum = 0, size_sum = 0;
    for (int c : inc) inc_sum += c;
    for (const Biclique& b : f.items) size_sum += b.vertices.count();
    CHECK(inc_sum == size_sum);
  }
}

TEST_CASE("abort thresholds fire as first-class outcomes") {
  Graph c5 = cycle(5);
  EnumResult by_total = enumerate_bicliques(c5, EnumLimits{3, std::nullopt});
  REQUIRE(std::holds_alternative<EnumAborted>(by_total));
  EnumAborted t = std::get<EnumAborted>(by_total);
  CHECK(t.which == EnumAborted::Which::Total);
  CHECK(t.found == 4);  // fires just past the threshold

  EnumResult by_vertex = enumerate_bicliques(c5, EnumLimits{std::nullopt, 2});
  REQUIRE(std::holds_alternative<EnumAborted>(by_vertex));
  EnumAborted v = std::get<EnumAborted>(by_vertex);
  CHECK(v.which == EnumAborted::Which::PerVertex);
  CHECK(v.vertex >= 0);
  CHECK(v.vertex < 5);

  // every vertex of C5 lies in exactly 3 bicliques, so 3 per vertex is fine
  CHECK(std::holds_alternative<BicliqueFamily>(
      enumerate_bicliques(c5, EnumLimits{std::nullopt, 3})));
  CHECK(std::holds_alternative<BicliqueFamily>(enumerate_bicliques(c5, EnumLimits{5, 4})));
}

TEST_CASE("false twins lie in exactly the same bicliques") {
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g, uint64_t) {
      auto classes = false_twin_classes(g);
      if (static_cast<int>(classes.size()) == n) return;
      BicliqueFamily f = enumerate_all_bicliques(g);
      for (const auto& cls : classes) {
        for (size_t i = 1; i < cls.size(); ++i) {
          for (const Biclique& b : f.items)
            CHECK(b.vertices.test(cls[0]) == b.vertices.test(cls[i]));
        }
      }
    });
  }
}

TEST_CASE("twin-free connected graphs have at least ceil(n/2) bicliques") {
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g, uint64_t) {
      if (!g.is_connected() || !is_twin_free(g)) return;
      CHECK(static_cast<int>(enumerate_all_bicliques(g).size()) >= (n + 1) / 2);
    });
  }
}

TEST_CASE("enumeration is deterministic and sorted") {
  std::mt19937 rng(9001);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1) g.add_edge(i, j);
    BicliqueFamily a = enumerate_all_bicliques(g);
    BicliqueFamily b = enumerate_all_bicliques(g);
    CHECK(a.items == b.items);
    for (size_t i = 1; i < a.items.size(); ++i)
      CHECK(VertexSet::size_lex_less(a.items[i - 1].vertices, a.items[i].vertices));
  }
}

TEST_CASE("enumeration handles a wide star without blowing up") {
  // one biclique, found fast even though the star has 50 leaves
  BicliqueFamily f = enumerate_all_bicliques(star(50));
  REQUIRE(f.size() == 1);
  CHECK(f.items[0].vertices.count() == 51);

  // the same star with the center at the highest index
  Graph flipped(51);
  for (int i = 0; i < 50; ++i) flipped.add_edge(i, 50);
  CHECK(enumerate_all_bicliques(flipped).size() == 1);

  CHECK(enumerate_all_bicliques(complete_bipartite(20, 20)).size() == 1);
}

TEST_CASE("enumeration agrees with the subset-scan oracle on random mid-size graphs") {
  std::mt19937 rng(0xbeef);
  for (int trial = 0; trial < 1200; ++trial) {
    int n = 8 + static_cast<int>(rng() % 9);  // 8..16
    double p = 0.15 + 0.7 * (static_cast<double>(rng() % 1000) / 1000.0);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (static_cast<double>(rng() % 1000) / 1000.0 < p) g.add_edge(i, j);
    CHECK(family_masks(enumerate_all_bicliques(g)) == brute_force_biclique_masks(g));
  }
}

TEST_CASE("enumeration past 64 vertices: known families") {
  // cycles have one biclique per consecutive triple, paths lose the two ends
  BicliqueFamily c70 = enumerate_all_bicliques(cycle(70));
  CHECK(c70.size() == 70);
  for (const Biclique& b : c70.items) CHECK(b.vertices.count() == 3);
  CHECK(enumerate_all_bicliques(path(70)).size() == 68);
  CHECK(enumerate_all_bicliques(complete_bipartite(35, 40)).size() == 1);
  CHECK(enumerate_all_bicliques(star(80)).size() == 1);

  // complete graphs: every edge is a maximal biclique
  BicliqueFamily k12 = enumerate_all_bicliques(complete(12));
  CHECK(k12.size() == 66);
}

TEST_CASE("empty graph is rejected, counters track calls") {
  CHECK_THROWS_AS(enumerate_all_bicliques(Graph(0)), std::invalid_argument);
  reset_enum_counters();
  CHECK(enum_counters().calls == 0);
  enumerate_all_bicliques(cycle(5));
  CHECK(enum_counters().calls == 1);
  CHECK(enum_counters().max_vertex_count == 5);
}

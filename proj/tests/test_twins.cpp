#include <doctest.h>

#include "helpers.hpp"
#include "kbg/labeled.hpp"
#include "kbg/twins.hpp"

using namespace kbg;
using namespace kbg::test;

TEST_CASE("false twin classes on named graphs") {
  // star K_{1,3}: the three leaves share N = {0}
  auto star_classes = false_twin_classes(star(3));
  REQUIRE(star_classes.size() == 2);
  CHECK(star_classes[0] == std::vector<int>{0});
  CHECK(star_classes[1] == std::vector<int>{1, 2, 3});

  // C5 has five distinct neighborhoods
  CHECK(false_twin_classes(cycle(5)).size() == 5);

  // C4: opposite vertices are twins
  auto c4_classes = false_twin_classes(cycle(4));
  REQUIRE(c4_classes.size() == 2);
  CHECK(c4_classes[0] == std::vector<int>{0, 2});
  CHECK(c4_classes[1] == std::vector<int>{1, 3});
}

TEST_CASE("twin reduction on named graphs") {
  CHECK(twin_reduce(star(3)).reduced == complete(2));
  CHECK(twin_reduce(complete_bipartite(3, 3)).reduced == complete(2));

  TwinReduction g = twin_reduce(gem());
  CHECK(g.reduced == gem());  // no twins: all neighborhood pairs differ
  CHECK(g.classes.size() == 5);

  TwinReduction d = twin_reduce(diamond());
  CHECK(d.representatives == std::vector<int>{0, 1, 2});
  CHECK(d.reduced == complete(3));
}

TEST_CASE("twin reduction is idempotent and representatives are minimal") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g, uint64_t) {
      TwinReduction tw = twin_reduce(g);
      CHECK(static_cast<int>(tw.classes.size()) == tw.reduced.vertex_count());
      for (const std::vector<int>& cls : tw.classes)
        CHECK(cls.front() == *std::min_element(cls.begin(), cls.end()));
      CHECK(is_twin_free(tw.reduced));
      TwinReduction again = twin_reduce(tw.reduced);
      CHECK(again.reduced == tw.reduced);
      for (const std::vector<int>& cls : again.classes) CHECK(cls.size() == 1);
    });
  }
}

TEST_CASE("same class means neighborhood equality and a swap automorphism") {
  // u,v share a class iff swapping them is an automorphism fixing all other
  // vertices AND they are non-adjacent (adjacent swappable pairs are true
  // twins, not false twins)
  for (int n = 2; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g, uint64_t) {
      auto classes = false_twin_classes(g);
      std::vector<int> class_of(static_cast<size_t>(n));
      for (size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) class_of[static_cast<size_t>(v)] = static_cast<int>(c);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          bool swap_is_automorphism = true;
          for (int w = 0; w < n && swap_is_automorphism; ++w) {
            if (w == u || w == v) continue;
            swap_is_automorphism = g.adjacent(u, w) == g.adjacent(v, w);
          }
          bool same_class = class_of[static_cast<size_t>(u)] == class_of[static_cast<size_t>(v)];
          CHECK(same_class == (swap_is_automorphism && !g.adjacent(u, v)));
        }
      }
    });
  }
}

TEST_CASE("twin reduction scales to the wide tier") {
  Graph big = complete_bipartite(50, 50);
  TwinReduction tw = twin_reduce(big);
  CHECK(tw.reduced == complete(2));
  CHECK(tw.classes.size() == 2);
  CHECK(tw.classes[0].size() == 50);
}

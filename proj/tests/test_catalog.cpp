#include <doctest.h>

#include "ordex/catalog.hpp"
#include "ordex/structure.hpp"

using namespace ordex;

TEST_SUITE("catalog") {

TEST_CASE("permutations") {
  auto p = Permutation::parse("132");
  CHECK(p.size() == 3);
  CHECK(p(2) == 3);
  CHECK(p.word() == "132");
  CHECK(Permutation::all(3).size() == 6);
  CHECK(Permutation::all(3).front() == Permutation::identity(3));
  CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").size() == 10);
  CHECK_THROWS_AS(Permutation::parse("112"), InputError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), InputError);
}

TEST_CASE("generalized matchings") {
  CHECK(generalized_matching(1, Permutation::parse("1"), Flavor::Bipartite) ==
        PatternGraph::bipartite(1, 1, {{1, 1}}));
  CHECK(permutation_matching(Permutation::parse("21")) ==
        PatternGraph::bipartite(2, 2, {{1, 2}, {2, 1}}));
  CHECK(generalized_matching(2, Permutation::parse("12"), Flavor::Ordered) ==
        PatternGraph::ordered(6, {{1, 3}, {1, 4}, {2, 5}, {2, 6}}));
  auto c = generalized_matching(2, Permutation::parse("21"), Flavor::Cyclic);
  CHECK(c.flavor() == Flavor::Cyclic);
  CHECK(c.nU() == 6);
  auto b = generalized_matching(3, Permutation::parse("231"), Flavor::Bipartite);
  CHECK(b.nU() == 3);
  CHECK(b.nV() == 9);
  CHECK(b.edge_count() == 9);
}

TEST_CASE("keszegh H_k") {
  auto h1 = keszegh_h(1);
  CHECK(h1 == PatternGraph::bipartite(7, 7,
                                      {{4, 1}, {1, 2}, {1, 3}, {6, 7}, {5, 7}, {7, 4}, {2, 6},
                                       {3, 5}}));
  for (int k = 1; k <= 4; ++k) {
    auto h = keszegh_h(k);
    CHECK(h.nU() == 3 * k + 4);
    CHECK(h.nV() == 3 * k + 4);
    CHECK(h.edge_count() == static_cast<std::size_t>(3 * k + 5));
  }
}

TEST_CASE("sailboat and nested pattern") {
  CHECK(sailboat() ==
        PatternGraph::bipartite(3, 4, {{1, 1}, {2, 1}, {3, 2}, {1, 3}, {2, 4}, {3, 4}}));
  CHECK(nested_crossing_pattern() == PatternGraph::ordered(4, {{1, 3}, {1, 4}, {2, 4}}));
}

TEST_CASE("ordered Turan graphs") {
  CHECK(ordered_turan(4, 4) == complete_graph(Flavor::Ordered, 4));
  CHECK(ordered_turan(6, 2).edge_count() == 9);
  CHECK(ordered_turan(5, 2).edge_count() == 6);
  CHECK(interval_chromatic_number(ordered_turan(7, 3)) == 3);
}

TEST_CASE("generator names") {
  CHECK(generate("sailboat") == sailboat());
  CHECK(generate("H:1") == keszegh_h(1));
  CHECK(generate("match:1:12:bipartite") == permutation_matching(Permutation::parse("12")));
  CHECK(generate("turan:6:2") == ordered_turan(6, 2));
  CHECK_THROWS_AS(generate("wheel:5"), InputError);
  CHECK_THROWS_AS(generate("H:x"), InputError);
}

}  // TEST_SUITE

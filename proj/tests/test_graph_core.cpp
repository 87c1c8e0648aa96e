#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ordex/catalog.hpp"
#include "ordex/containment.hpp"
#include "ordex/graph_io.hpp"
#include "ordex/structure.hpp"

using namespace ordex;

TEST_SUITE("graph_core") {

TEST_CASE("constructors validate and sort edges") {
  auto g = PatternGraph::ordered(4, {{3, 4}, {1, 2}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {3, 4}});
  CHECK(g.has_edge(2, 1));
  CHECK_THROWS_AS(PatternGraph::ordered(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(PatternGraph::ordered(3, {{2, 2}}), InputError);
  CHECK_THROWS_AS(PatternGraph::ordered(3, {{1, 2}, {1, 2}}), InputError);
  CHECK_THROWS_AS(PatternGraph::bipartite(2, 2, {{1, 3}}), InputError);
}

TEST_CASE("a graph contains itself via the identity") {
  for (const auto& p : {sailboat(), keszegh_h(1), generate("match:2:21:ordered"),
                        generate("match:1:312:cyclic")}) {
    auto w = contains(p, p);
    REQUIRE(w);
    CHECK(is_valid_embedding(p, p, *w));
    CHECK(*w == identity_embedding(p));
  }
}

TEST_CASE("containment examples") {
  auto k7 = complete_graph(Flavor::Ordered, 7);
  auto sail = concatenate_parts(sailboat());
  auto w = contains(k7, sail);
  REQUIRE(w);
  CHECK(is_valid_embedding(k7, sail, *w));
  CHECK_THROWS_AS(contains(k7, sailboat()), InputError);
  CHECK_THROWS_AS(contains(k7, PatternGraph::ordered(3, {})), InputError);
}

TEST_CASE("containment agrees with exhaustive injections") {
  std::mt19937_64 rng(7);
  for (Flavor f : {Flavor::Ordered, Flavor::Bipartite, Flavor::Cyclic}) {
    for (int t = 0; t < 150; ++t) {
      auto p = oracle::random_pattern(f, 4, rng);
      const int n = std::uniform_int_distribution<int>(1, 7)(rng);
      const int m = f == Flavor::Bipartite ? std::uniform_int_distribution<int>(1, 7)(rng) : 0;
      auto h = oracle::random_graph(f, n, m, 0.45, rng);
      auto w = contains(h, p);
      CHECK(w.has_value() == oracle::contains(h, p));
      if (w) CHECK(is_valid_embedding(h, p, *w));
    }
  }
}

TEST_CASE("cyclic containment sees every rotation") {
  auto p = PatternGraph::cyclic(3, {{1, 2}, {1, 3}});
  auto h = PatternGraph::cyclic(5, {{2, 3}, {3, 5}});
  CHECK(contains(h, p));
  CHECK_FALSE(contains(with_flavor(h, Flavor::Ordered), with_flavor(p, Flavor::Ordered)));
}

TEST_CASE("interval chromatic number") {
  CHECK(interval_chromatic_number(PatternGraph::ordered(5, {})) == 1);
  CHECK(interval_chromatic_number(PatternGraph::ordered(2, {{1, 2}})) == 2);
  CHECK(interval_chromatic_number(ordered_turan(9, 3)) == 3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(Flavor::Ordered, std::uniform_int_distribution<int>(1, 9)(rng),
                                  0, 0.3, rng);
    CHECK(interval_chromatic_number(g) == oracle::brute_interval_chi(g));
  }
}

TEST_CASE("circular chromatic number") {
  CHECK(circular_chromatic_number(PatternGraph::cyclic(4, {})) == 1);
  CHECK(circular_chromatic_number(PatternGraph::cyclic(2, {{1, 2}})) == 2);
  CHECK(circular_chromatic_number(generalized_matching(1, Permutation::identity(2), Flavor::Cyclic)) ==
        2);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(Flavor::Cyclic, std::uniform_int_distribution<int>(1, 9)(rng), 0,
                                  0.3, rng);
    CHECK(circular_chromatic_number(g) == oracle::brute_circular_chi(g));
  }
}

TEST_CASE("symmetries") {
  CHECK(bipartite_variants(PatternGraph::bipartite(1, 1, {{1, 1}})).size() == 1);
  auto id2 = permutation_matching(Permutation::parse("12"));
  auto v = bipartite_variants(id2);
  CHECK(v.size() == 2);
  CHECK(std::count(v.begin(), v.end(), permutation_matching(Permutation::parse("21"))) == 1);
  CHECK(apply({true, true, false}, sailboat()) == sailboat());
  CHECK(BipartiteSymmetry::all().size() == 8);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_graph(Flavor::Bipartite, 3, 5, 0.4, rng);
    for (const auto& s : BipartiteSymmetry::all()) CHECK(apply(inverse(s), apply(s, g)) == g);
    auto c = canonical_variant(g);
    CHECK(apply(c.symmetry, g) == c.graph);
    auto all = bipartite_variants(g);
    CHECK(c.graph == all.front());
  }
}

TEST_CASE("split regularize") {
  auto g = PatternGraph::bipartite(2, 5, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
  auto s = split_regularize(g, 2);
  CHECK(s.nU() == 2);
  CHECK(s.edge_count() == 4);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    auto h = oracle::random_graph(Flavor::Bipartite, 4, 6, 0.5, rng);
    auto one = split_regularize(h, 1);
    CHECK(one.edge_count() == h.edge_count());
    for (int u = 1; u <= one.nU(); ++u) CHECK(one.row_degree(u) == 1);
    CHECK(split_regularize(h, 3, 99) == split_regularize(h, 3, 99));
  }
}

TEST_CASE("layered decomposition") {
  for (auto& layer : layered_decomposition(PatternGraph::ordered(8, {}))) CHECK(layer.empty());
  auto layers = layered_decomposition(PatternGraph::ordered(8, {{1, 8}}));
  REQUIRE(!layers.empty());
  CHECK(layers[0].edge_count() == 1);
  for (std::size_t i = 1; i < layers.size(); ++i) CHECK(layers[i].empty());
  auto k = complete_graph(Flavor::Ordered, 8);
  std::size_t total = 0;
  for (auto& layer : layered_decomposition(k)) total += layer.edge_count();
  CHECK(total == 28);
}

TEST_CASE("cycles, forests and isolated vertices") {
  auto c4 = PatternGraph::bipartite(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(underlying_shortest_cycle(c4) == 4);
  CHECK_FALSE(underlying_shortest_cycle(sailboat()));
  CHECK(is_tree(sailboat()));
  CHECK(sailboat().edge_count() == 6);
  CHECK(sailboat().nU() == 3);
  CHECK(sailboat().nV() == 4);
  CHECK(underlying_shortest_cycle(PatternGraph::ordered(3, {{1, 2}, {2, 3}, {1, 3}})) == 3);

  auto h1 = keszegh_h(1);
  auto r = remove_isolated_vertices(h1);
  CHECK(r.graph == h1);
  CHECK(r.removed_u + r.removed_v == 0);
  auto empty = remove_isolated_vertices(PatternGraph::bipartite(2, 3, {}));
  CHECK(empty.graph.vertex_count() == 0);
  CHECK(empty.removed_u == 2);
  CHECK(empty.removed_v == 3);
}

TEST_CASE("hats") {
  CHECK_FALSE(find_double_extended_hat(PatternGraph::bipartite(3, 3, {})));
  auto h = find_double_extended_hat(sailboat());
  REQUIRE(h);
  // sailboat rows are b, a, c and columns x, w, z, y
  CHECK(h->base == Hat{2, 1, 4});
  CHECK(h->left_extension == Hat{1, 1, 3});
  CHECK(h->right_extension == Hat{3, 2, 4});
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_graph(Flavor::Bipartite, 6, 8, 0.3, rng);
    if (!oracle::contains(g, sailboat())) CHECK_FALSE(find_double_extended_hat(g));
  }
}

}  // TEST_SUITE

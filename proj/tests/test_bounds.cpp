#include <doctest.h>

#include "ordex/bounds.hpp"
#include "ordex/catalog.hpp"
#include "ordex/graph_io.hpp"
#include "ordex/structure.hpp"

using namespace ordex;

namespace {

BoundTerm term(int num, int den, int log_exp = 0, bool subexp = false) {
  return BoundTerm{Rational(num, den), log_exp, subexp};
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("growth order and antichains") {
  CHECK(compare_growth(term(1, 1, 5), term(4, 3)) < 0);
  CHECK(compare_growth(term(1, 1, 0, true), term(1, 1, 9)) > 0);
  CHECK(compare_growth(term(1, 1, 2), term(1, 1, 2)) == 0);
  AsymptoticBound b(Direction::Upper, {term(1, 1), term(1, 1, 2), term(1, 1, 0, true)});
  CHECK(b.terms().size() == 2);
  CHECK(b.dominant() == term(1, 1, 0, true));
  CHECK(AsymptoticBound(Direction::Upper, {term(1, 1)}).times_log(2).terms() ==
        std::vector<BoundTerm>{term(1, 1, 2)});
  CHECK(AsymptoticBound(Direction::Upper, {term(1, 1, 1)}).to_string() == "O(n log n)");
  CHECK(AsymptoticBound(Direction::Lower, {term(4, 3)}).to_string() == "Omega(n^4/3)");
}

TEST_CASE("classification") {
  auto tri = classify_pattern(PatternGraph::ordered(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(tri.kind == PatternClass::Quadratic);
  CHECK(tri.chi == 3);
  REQUIRE(tri.density);
  CHECK(*tri.density == Rational(1, 4));
  CHECK(classify_pattern(sailboat()).kind == PatternClass::Sailboat);
  CHECK(classify_pattern(apply({true, true, true}, sailboat())).kind == PatternClass::Sailboat);
  CHECK(classify_pattern(permutation_matching(Permutation::parse("12"))).kind ==
        PatternClass::Bipartite);
  CHECK(classify_pattern(nested_crossing_pattern()).kind == PatternClass::Bipartite);
}

TEST_CASE("matching base case") {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& pi : Permutation::all(k)) {
      auto r = derive_upper_bound(permutation_matching(pi));
      CHECK(r.bound.terms() == std::vector<BoundTerm>{term(1, 1)});
      CHECK(r.derivation.terminal == "matching");
      CHECK(replay_derivation(r.derivation));
    }
  }
  auto two = derive_upper_bound(generalized_matching(2, Permutation::parse("231"), Flavor::Bipartite));
  CHECK(two.bound.terms() == std::vector<BoundTerm>{term(1, 1)});
}

TEST_CASE("sailboat and trees") {
  auto s = derive_upper_bound(sailboat());
  CHECK(s.bound.dominant() == term(1, 1, 0, true));
  CHECK(s.derivation.terminal == "sailboat");
  CHECK(replay_derivation(s.derivation));

  // A star with its centre in the middle needs rule (f) or (c).
  auto star = PatternGraph::bipartite(1, 3, {{1, 1}, {1, 2}, {1, 3}});
  auto r = derive_upper_bound(star);
  CHECK(r.bound.dominant().n_exp == Rational(1));
  CHECK_FALSE(r.derivation.no_derivation);
  CHECK(replay_derivation(r.derivation));

  auto c4 = derive_upper_bound(PatternGraph::bipartite(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(c4.derivation.no_derivation);
  CHECK(c4.derivation.terminal == "none");
  CHECK(c4.bound.dominant() == term(2, 1));
}

TEST_CASE("replay rejects tampered traces") {
  auto r = derive_upper_bound(PatternGraph::bipartite(2, 3, {{1, 1}, {1, 2}, {2, 3}}));
  REQUIRE(replay_derivation(r.derivation));
  REQUIRE(!r.derivation.steps.empty());
  auto bad = r.derivation;
  bad.steps.back().to = "bipartite 1 1; 1 1";
  std::string why;
  CHECK_FALSE(replay_derivation(bad, &why));
  CHECK(!why.empty());
  auto orphan = r.derivation;
  orphan.steps.front().from = "bipartite 3 3; 1 1";
  CHECK_FALSE(replay_derivation(orphan));
}

TEST_CASE("lower bounds") {
  auto c4 = derive_lower_bound(PatternGraph::bipartite(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(c4.bound.dominant() == term(4, 3));
  CHECK(c4.derivation.terminal == "cycle");
  auto h = derive_lower_bound(keszegh_h(1));
  CHECK(h.bound.dominant() == term(1, 1, 1));
  auto single = derive_lower_bound(PatternGraph::bipartite(1, 1, {{1, 1}}));
  CHECK(single.bound.dominant() == term(0, 1));
  CHECK(single.derivation.terminal == "floor");
  auto nested = derive_lower_bound(nested_crossing_pattern());
  CHECK(nested.bound.dominant() == term(1, 1, 1));
}

TEST_CASE("lifting to ordered hosts") {
  auto lift = [](BoundTerm t) {
    return lift_bipartite_to_ordered(AsymptoticBound(Direction::Upper, {t})).terms();
  };
  CHECK(lift(term(1, 1)) == std::vector<BoundTerm>{term(1, 1, 1)});
  CHECK(lift(term(3, 2)) == std::vector<BoundTerm>{term(3, 2)});
  CHECK(lift(term(1, 1, 2)) == std::vector<BoundTerm>{term(1, 1, 3)});
  auto ord = derive_ordered_upper_bound(nested_crossing_pattern());
  CHECK(ord.bound.dominant() == term(1, 1, 1));
  CHECK(replay_derivation(ord.derivation));
  auto tri = derive_ordered_upper_bound(PatternGraph::ordered(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(tri.bound.dominant() == term(2, 1));
}

}  // TEST_SUITE

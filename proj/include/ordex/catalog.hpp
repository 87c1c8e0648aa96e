#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordex/pattern_graph.hpp"

namespace ordex {

/// A permutation of 1..k, stored as the value sequence pi(1), ..., pi(k).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  // "132" for k <= 9; comma-separated ("10,2,...") for longer permutations.
  static Permutation parse(std::string_view word);
  static Permutation identity(int k);
  // All permutations of size k in lexicographic order.
  static std::vector<Permutation> all(int k);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const { return values_; }
  std::string word() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// m-tuple matching with permutation pi (k = |pi|).
//   Ordered/Cyclic: (m+1)k vertices, edges v_j v_{k+i+m(pi(j)-1)}.
//   Bipartite: |U| = k, |V| = mk, edges (u_j, i+m(pi(j)-1)).
// For i in 1..m and j in 1..k. m = 1 Bipartite is graph(pi).
PatternGraph generalized_matching(int m, const Permutation& pi, Flavor flavor);

inline PatternGraph permutation_matching(const Permutation& pi) {
  return generalized_matching(1, pi, Flavor::Bipartite);
}

// Keszegh's H_k: 3k+4 vertices per part, 3k+5 edges.
PatternGraph keszegh_h(int k);

// U = {u1,u2,u3} top row, V = {v1..v4} bottom row,
// edges u1v1 u2v1 u3v2 u1v3 u2v4 u3v4.
PatternGraph sailboat();

// Complete r-partite ordered graph; classes are consecutive intervals, the
// first n mod r of size ceil(n/r) and the rest of size floor(n/r).
PatternGraph ordered_turan(int n, int r);

// The ordered pattern on 1..4 with edges 1-3, 1-4, 2-4.
PatternGraph nested_crossing_pattern();

// Complete graph of the given flavor (rows x cols when Bipartite).
PatternGraph complete_graph(Flavor flavor, int n, int m = 0);

// Parses a generator name: sailboat | H:<k> | match:<m>:<word>:<flavor> | turan:<n>:<r>.
PatternGraph generate(std::string_view name);

}  // namespace ordex

#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordex/catalog.hpp"
#include "ordex/pattern_graph.hpp"

namespace ordex {

class ResultCache;

using BigInt = boost::multiprecision::cpp_int;

/// Size limits. Requests above a cap raise RefusedError.
struct SolverCaps {
  int ordered = 12;        // host vertices
  int bipartite = 8;       // host vertices per part
  int cyclic = 12;         // host vertices
  int count_avoiders = 4;  // n for n x n matrices
  int count_perms = 10;    // permutation length
};

struct ExtremalRecord {
  Flavor flavor = Flavor::Ordered;
  PatternGraph pattern;
  int n = 0;
  int m = 0;  // Bipartite column count, else 0
  std::size_t value = 0;
  PatternGraph witness;
  bool from_cache = false;
};

// ex_<(n, P), ex_2(n, m, P) or ex_o(n, P) by branch and bound over candidate
// host edges in lexicographic order. The witness is checked before returning.
// Bipartite patterns are solved on their canonical variant and the witness is
// mapped back through the inverse symmetry.
ExtremalRecord max_edges_avoiding(Flavor flavor, int n, std::optional<int> m,
                                  const PatternGraph& pattern, const SolverCaps& caps = {},
                                  ResultCache* cache = nullptr);

// Number of n x n 0-1 matrices avoiding a bipartite pattern.
BigInt count_avoiders(int n, const PatternGraph& pattern, const SolverCaps& caps = {});

// S(n, pi): permutations of 1..n with no occurrence of pi.
BigInt count_avoiding_permutations(int n, const Permutation& pi, const SolverCaps& caps = {});

struct GrowthRow {
  int n = 0;
  std::size_t value = 0;
  double per_n = 0.0;
  std::optional<double> per_n_log_n;  // log base 2; empty at n = 1
};

// One row per n in [n_min, n_max]; Bipartite hosts are n x n.
std::vector<GrowthRow> growth_table(const PatternGraph& pattern, int n_min, int n_max,
                                    const SolverCaps& caps = {}, ResultCache* cache = nullptr);

}  // namespace ordex

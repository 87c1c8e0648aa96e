#pragma once

#include <cstdint>
#include <optional>

#include "ordex/containment.hpp"
#include "ordex/pattern_graph.hpp"

namespace ordex {

// Ordered: v_i v_j whenever j - i = base^k, k >= 0.
// Bipartite (n x n): u_i v_j whenever j - i = base^k, k >= 0.
PatternGraph power_distance_graph(int n, int base, Flavor flavor);

// Sum over base^k < n of (n - base^k): the edge count of either flavor above.
std::int64_t power_distance_edge_count(int n, int base);

struct CkFreeResult {
  PatternGraph graph;
  double probability = 0.0;       // n^((2-k)/(k-1)) / 2
  std::size_t drawn_edges = 0;    // before deleting edges on k-cycles
  double target_edges = 0.0;      // (1/4 - 2^{-k-1}) n^{k/(k-1)}
};

// Random ordered graph with edge probability n^((2-k)/(k-1))/2 over all pairs
// (i < j, lexicographic, one Rng::unit() draw per pair) followed by deletion of
// every edge that lies on a k-cycle of the drawn graph.
CkFreeResult random_ck_free(int n, int k, std::uint64_t seed);

// True when the edge {a, b} (1-based) lies on a cycle of length exactly k.
bool edge_on_k_cycle(const PatternGraph& graph, int a, int b, int k);
bool has_k_cycle(const PatternGraph& graph, int k);

struct VerificationReport {
  bool avoids = true;
  std::optional<Embedding> witness;
  std::size_t edge_count = 0;
  double density = 0.0;  // edges per vertex
};

VerificationReport verify_construction(const PatternGraph& graph, const PatternGraph& pattern);

}  // namespace ordex

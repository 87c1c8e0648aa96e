#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordex/pattern_graph.hpp"

namespace ordex {

// Minimum number of consecutive intervals with no edge inside an interval,
// by the left-to-right greedy sweep. Requires an Ordered graph.
int interval_chromatic_number(const PatternGraph& graph);

// Minimum number of circular intervals with no edge inside an interval.
// Requires a Cyclic graph.
int circular_chromatic_number(const PatternGraph& graph);

// Relabels a Cyclic (or Ordered) graph so that old vertex start+1 becomes vertex 1.
PatternGraph rotate_cyclic(const PatternGraph& graph, int start);

/// One of the eight symmetries of a 0-1 matrix pattern generated by reversing
/// the rows, reversing the columns and transposing. Applied in that order.
struct BipartiteSymmetry {
  bool reverse_rows = false;
  bool reverse_cols = false;
  bool transpose = false;

  std::string name() const;
  static std::vector<BipartiteSymmetry> all();
  friend bool operator==(const BipartiteSymmetry&, const BipartiteSymmetry&) = default;
};

PatternGraph apply(const BipartiteSymmetry& s, const PatternGraph& bipartite);
// (ri, ci) of the image of cell (u, v) under s, for a graph with nU rows and nV cols.
Edge apply_to_cell(const BipartiteSymmetry& s, int nU, int nV, Edge cell);
BipartiteSymmetry inverse(const BipartiteSymmetry& s);

// Distinct images of P under the eight symmetries, sorted, deduplicated.
std::vector<PatternGraph> bipartite_variants(const PatternGraph& bipartite);

// Smallest variant under the PatternGraph order, and a symmetry that produces it.
struct CanonicalVariant {
  PatternGraph graph;
  BipartiteSymmetry symmetry;
};
CanonicalVariant canonical_variant(const PatternGraph& bipartite);

// Splits every U-vertex of degree d into floor(d/q) vertices of degree q with
// disjoint neighbour sets. Without a seed, neighbours are chunked in ascending
// order of V; a seed shuffles each neighbour list and the sibling order.
PatternGraph split_regularize(const PatternGraph& bipartite, int q,
                              std::optional<std::uint64_t> seed = std::nullopt);

// Layers G_0..G_L, L = ceil(log2 n): edge v_j v_k (0-based) goes to the layer i
// with floor(2^i j/n) == floor(2^i k/n) and floor(2^(i+1) j/n) != floor(2^(i+1) k/n).
std::vector<PatternGraph> layered_decomposition(const PatternGraph& ordered);

// Connected components, each as an induced subgraph (isolated vertices are
// one-vertex components). Vertex order is preserved.
std::vector<PatternGraph> connected_components(const PatternGraph& graph);

// Girth of the underlying simple graph (both parts for Bipartite), or nullopt
// for a forest.
std::optional<int> underlying_shortest_cycle(const PatternGraph& graph);

bool is_forest(const PatternGraph& graph);
bool is_tree(const PatternGraph& graph);

struct IsolatedRemoval {
  PatternGraph graph;
  int removed_u = 0;  // from the only part when not Bipartite
  int removed_v = 0;
};
IsolatedRemoval remove_isolated_vertices(const PatternGraph& graph);

// Deletes the listed vertices (1-based; `from_v` selects the V part when
// Bipartite) and renumbers the survivors in order.
PatternGraph delete_vertices(const PatternGraph& graph, std::vector<int> vertices,
                             bool from_v = false);

// Induced subgraph on row range [u_lo, u_hi] and column range [v_lo, v_hi] (1-based, inclusive).
PatternGraph induced_block(const PatternGraph& bipartite, int u_lo, int u_hi, int v_lo,
                           int v_hi);

// An Ordered graph of interval chromatic number <= 2 viewed as bipartite, split
// at the greedy interval boundary.
PatternGraph split_into_parts(const PatternGraph& ordered);

// Edge-subgraph (same vertex sets) keeping the listed edges.
PatternGraph with_edges(const PatternGraph& graph, std::vector<Edge> edges);

/// A pair of edges (apex, left_foot), (apex, right_foot) with left_foot < right_foot.
struct Hat {
  int apex = 0;
  int left_foot = 0;
  int right_foot = 0;

  int width() const { return right_foot - left_foot; }
  friend bool operator==(const Hat&, const Hat&) = default;
};

struct ExtendedHat {
  Hat left_extension;   // (b, x, z)
  Hat base;             // (a, x, y)
  Hat right_extension;  // (c, w, y)
};

// First base hat (a, x, y) in lexicographic order that has a left extension
// (b, x, z), b < a, (y-x)/2 < z-x < y-x and a right extension (c, w, y),
// c > a, (y-x)/2 < y-w < y-x. The six edges always form a sailboat.
std::optional<ExtendedHat> find_double_extended_hat(const PatternGraph& bipartite);

}  // namespace ordex

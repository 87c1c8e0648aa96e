#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordex {

// Rejected input: malformed values, mismatched flavors, broken invariants.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed request the toolkit declines to run (size caps and similar).
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Flavor { Ordered, Bipartite, Cyclic };

std::string_view to_string(Flavor flavor);
Flavor parse_flavor(std::string_view text);

// 1-based endpoints. Ordered/Cyclic: first < second. Bipartite: (U index, V index).
struct Edge {
  int first = 0;
  int second = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A vertex-ordered graph in one of three flavors.
///
/// Ordered and Cyclic graphs have a single vertex sequence 1..n (for Cyclic the
/// sequence is read around a circle). Bipartite graphs have a row part U = 1..nU
/// and a column part V = 1..nV; equivalently an nU x nV 0-1 matrix.
///
/// Values are immutable once built. The edge list is kept sorted, so two equal
/// graphs always have the same edge sequence and the same serialization.
class PatternGraph {
 public:
  PatternGraph() = default;

  static PatternGraph ordered(int n, std::vector<Edge> edges);
  static PatternGraph cyclic(int n, std::vector<Edge> edges);
  static PatternGraph bipartite(int nU, int nV, std::vector<Edge> edges);

  Flavor flavor() const { return flavor_; }
  bool is_bipartite() const { return flavor_ == Flavor::Bipartite; }

  // Ordered/Cyclic: vertex count. Bipartite: |U|.
  int nU() const { return nU_; }
  // Bipartite: |V|. Otherwise 0.
  int nV() const { return nV_; }
  int vertex_count() const { return nU_ + nV_; }

  // Matrix view: rows are U (or all vertices), columns are V (or all vertices).
  int rows() const { return nU_; }
  int cols() const { return is_bipartite() ? nV_ : nU_; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  // Ordered/Cyclic: unordered pair test. Bipartite: (u, v).
  bool has_edge(int a, int b) const;

  // Ordered/Cyclic: all neighbours of vertex i, ascending.
  std::span<const int> neighbors(int i) const;
  // Bipartite: V-neighbours of u / U-neighbours of v, ascending.
  std::span<const int> row_neighbors(int u) const;
  std::span<const int> col_neighbors(int v) const;

  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
  int row_degree(int u) const { return static_cast<int>(row_neighbors(u).size()); }
  int col_degree(int v) const { return static_cast<int>(col_neighbors(v).size()); }

  friend bool operator==(const PatternGraph& a, const PatternGraph& b) {
    return a.flavor_ == b.flavor_ && a.nU_ == b.nU_ && a.nV_ == b.nV_ &&
           a.edges_ == b.edges_;
  }
  // Total order used for canonical representatives: (flavor, nU, nV, edges).
  friend std::strong_ordering operator<=>(const PatternGraph& a,
                                          const PatternGraph& b);

 private:
  PatternGraph(Flavor flavor, int nU, int nV, std::vector<Edge> edges);

  Flavor flavor_ = Flavor::Ordered;
  int nU_ = 0;
  int nV_ = 0;
  std::vector<Edge> edges_;
  // Ordered/Cyclic: one list per vertex. Bipartite: nU row lists then nV column lists.
  std::vector<std::vector<int>> adjacency_;
};

// Same vertex sets and edges, different flavor tag (Ordered <-> Cyclic only).
PatternGraph with_flavor(const PatternGraph& graph, Flavor flavor);

// Ordered graph on U followed by V ("concatenating the vertex sets").
PatternGraph concatenate_parts(const PatternGraph& bipartite);

}  // namespace ordex

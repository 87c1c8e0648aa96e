#pragma once

// Bitset-domain backtracking search shared by `contains` and the exact solver.
//
// Pattern vertices are assigned one at a time; each unassigned vertex keeps a
// domain of admissible host vertices. Assigning x := h intersects neighbour
// domains with N(h), cuts same-part domains to respect the vertex order, and
// re-tightens the order chain of every part.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ordex/pattern_graph.hpp"

namespace ordex::detail {

inline int words_for(int bits) { return (bits + 63) / 64; }

/// Mutable host adjacency as bit rows. Part 0 holds the rows (or all vertices
/// for Ordered/Cyclic), part 1 the columns of a bipartite host. Indices are
/// 0-based within a part.
class HostBits {
 public:
  HostBits() = default;
  HostBits(bool bipartite, int rows, int cols);
  explicit HostBits(const PatternGraph& graph);

  bool bipartite() const { return bipartite_; }
  int part_size(int part) const { return part == 0 ? rows_ : cols_; }
  // Width in words of a bit row over `part`.
  int words(int part) const { return part == 0 ? row_words_ : col_words_; }

  // Neighbours of host vertex h of `part`, as a bit row over the other part
  // (over part 0 again when not bipartite).
  const std::uint64_t* adj(int part, int h) const;

  bool has_edge(int a, int b) const;
  // a, b are 0-based; (row, col) when bipartite.
  void set_edge(int a, int b, bool present);

 private:
  std::uint64_t* adj_mut(int part, int h);

  bool bipartite_ = false;
  int rows_ = 0;
  int cols_ = 0;
  int row_words_ = 0;
  int col_words_ = 0;
  std::vector<std::uint64_t> row_bits_;  // rows_ x (bits over the other part)
  std::vector<std::uint64_t> col_bits_;  // cols_ x row_words_ (bipartite only)
};

/// Pattern in the search's vertex numbering: Ordered vertex i -> i-1;
/// Bipartite row u -> u-1, column v -> nU+v-1.
struct CompiledPattern {
  bool bipartite = false;
  int count = 0;
  int part_size[2] = {0, 0};
  std::vector<int> part;
  std::vector<int> pos;
  std::vector<std::vector<int>> adj;
  std::vector<int> fwd_degree;  // Ordered only: neighbours later in the order
  std::vector<int> bwd_degree;
  std::vector<std::vector<int>> members;  // per part, ascending position
  std::vector<std::pair<int, int>> edges;

  static CompiledPattern from(const PatternGraph& pattern);
};

// A fixed assignment: pattern vertex (search numbering) -> host index in its part.
using Forced = std::pair<int, int>;

class Matcher {
 public:
  Matcher(const CompiledPattern& pattern, const HostBits& host);

  // Returns true and fills `out` (host index per pattern vertex) when an
  // embedding extending `forced` exists.
  bool find(std::span<const Forced> forced, std::vector<int>* out = nullptr);

 private:
  std::uint64_t* dom(int level, int x) {
    return &domains_[(static_cast<std::size_t>(level) * pattern_.count + x) * words_];
  }
  bool initialise(std::span<const Forced> forced);
  bool assign(int level, int x, int h);
  bool tighten_chains(int level);
  bool order_pass(int level);
  bool support_pass(int level, bool* changed);
  bool search(int level);

  const CompiledPattern& pattern_;
  const HostBits& host_;
  int words_ = 0;
  std::vector<std::uint64_t> domains_;
  std::vector<char> assigned_;  // per level x count
  std::vector<int> result_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace ordex::detail

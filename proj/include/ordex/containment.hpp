#pragma once

#include <optional>
#include <vector>

#include "ordex/pattern_graph.hpp"

namespace ordex {

/// Order-preserving map of pattern vertices into host vertices, 1-based.
/// `u_map[i-1]` is the image of pattern vertex i (row i for Bipartite);
/// `v_map[j-1]` is the image of column j and is empty unless Bipartite.
struct Embedding {
  std::vector<int> u_map;
  std::vector<int> v_map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Finds an embedding of `pattern` into `host`, or nullopt if host avoids it.
// Cyclic containment is tested under every rotation of the circular order.
// Throws InputError on flavor mismatch or an edgeless pattern.
std::optional<Embedding> contains(const PatternGraph& host,
                                  const PatternGraph& pattern);

// Checks injectivity, order preservation (cyclic order for Cyclic) and that
// every pattern edge lands on a host edge.
bool is_valid_embedding(const PatternGraph& host, const PatternGraph& pattern,
                        const Embedding& embedding);

Embedding identity_embedding(const PatternGraph& graph);

}  // namespace ordex

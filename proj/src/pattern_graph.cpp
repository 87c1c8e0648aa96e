#include "ordex/pattern_graph.hpp"

#include <algorithm>
#include <string>

namespace ordex {

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Ordered:
      return "ordered";
    case Flavor::Bipartite:
      return "bipartite";
    case Flavor::Cyclic:
      return "cyclic";
  }
  return "ordered";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "ordered") return Flavor::Ordered;
  if (text == "bipartite") return Flavor::Bipartite;
  if (text == "cyclic") return Flavor::Cyclic;
  throw InputError("unknown flavor '" + std::string(text) +
                   "' (expected ordered, bipartite or cyclic)");
}

namespace {

std::string pair_text(const Edge& e) {
  return std::to_string(e.first) + " " + std::to_string(e.second);
}

}  // namespace

PatternGraph::PatternGraph(Flavor flavor, int nU, int nV,
                           std::vector<Edge> edges)
    : flavor_(flavor), nU_(nU), nV_(nV), edges_(std::move(edges)) {
  if (nU_ < 0 || nV_ < 0) throw InputError("negative vertex count");
  if (flavor_ != Flavor::Bipartite && nV_ != 0)
    throw InputError("only bipartite graphs have a second part");

  for (auto& e : edges_) {
    if (flavor_ == Flavor::Bipartite) {
      if (e.first < 1 || e.first > nU_)
        throw InputError("row index " + std::to_string(e.first) +
                         " out of range 1.." + std::to_string(nU_));
      if (e.second < 1 || e.second > nV_)
        throw InputError("column index " + std::to_string(e.second) +
                         " out of range 1.." + std::to_string(nV_));
    } else {
      for (int x : {e.first, e.second})
        if (x < 1 || x > nU_)
          throw InputError("vertex index " + std::to_string(x) +
                           " out of range 1.." + std::to_string(nU_));
      if (e.first == e.second)
        throw InputError("loop at vertex " + std::to_string(e.first));
      if (e.first > e.second) std::swap(e.first, e.second);
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InputError("duplicate edge " + pair_text(*dup));

  if (flavor_ == Flavor::Bipartite) {
    adjacency_.resize(static_cast<std::size_t>(nU_ + nV_));
    for (const auto& e : edges_) {
      adjacency_[e.first - 1].push_back(e.second);
      adjacency_[nU_ + e.second - 1].push_back(e.first);
    }
  } else {
    adjacency_.resize(static_cast<std::size_t>(nU_));
    for (const auto& e : edges_) {
      adjacency_[e.first - 1].push_back(e.second);
      adjacency_[e.second - 1].push_back(e.first);
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

PatternGraph PatternGraph::ordered(int n, std::vector<Edge> edges) {
  return PatternGraph(Flavor::Ordered, n, 0, std::move(edges));
}

PatternGraph PatternGraph::cyclic(int n, std::vector<Edge> edges) {
  return PatternGraph(Flavor::Cyclic, n, 0, std::move(edges));
}

PatternGraph PatternGraph::bipartite(int nU, int nV, std::vector<Edge> edges) {
  return PatternGraph(Flavor::Bipartite, nU, nV, std::move(edges));
}

bool PatternGraph::has_edge(int a, int b) const {
  if (is_bipartite()) {
    if (a < 1 || a > nU_ || b < 1 || b > nV_) return false;
    auto row = row_neighbors(a);
    return std::binary_search(row.begin(), row.end(), b);
  }
  if (a < 1 || a > nU_ || b < 1 || b > nU_) return false;
  auto list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::span<const int> PatternGraph::neighbors(int i) const {
  if (is_bipartite()) throw InputError("neighbors() on a bipartite graph");
  return adjacency_.at(static_cast<std::size_t>(i - 1));
}

std::span<const int> PatternGraph::row_neighbors(int u) const {
  if (!is_bipartite()) throw InputError("row_neighbors() needs a bipartite graph");
  return adjacency_.at(static_cast<std::size_t>(u - 1));
}

std::span<const int> PatternGraph::col_neighbors(int v) const {
  if (!is_bipartite()) throw InputError("col_neighbors() needs a bipartite graph");
  return adjacency_.at(static_cast<std::size_t>(nU_ + v - 1));
}

std::strong_ordering operator<=>(const PatternGraph& a, const PatternGraph& b) {
  if (auto c = a.flavor_ <=> b.flavor_; c != 0) return c;
  if (auto c = a.nU_ <=> b.nU_; c != 0) return c;
  if (auto c = a.nV_ <=> b.nV_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(),
                                                b.edges_.begin(), b.edges_.end());
}

PatternGraph with_flavor(const PatternGraph& graph, Flavor flavor) {
  if (graph.is_bipartite() || flavor == Flavor::Bipartite)
    throw InputError("with_flavor converts between ordered and cyclic only");
  return flavor == Flavor::Ordered ? PatternGraph::ordered(graph.nU(), graph.edges())
                                   : PatternGraph::cyclic(graph.nU(), graph.edges());
}

PatternGraph concatenate_parts(const PatternGraph& bipartite) {
  if (!bipartite.is_bipartite())
    throw InputError("concatenate_parts needs a bipartite graph");
  std::vector<Edge> edges;
  edges.reserve(bipartite.edge_count());
  for (const auto& e : bipartite.edges())
    edges.push_back({e.first, bipartite.nU() + e.second});
  return PatternGraph::ordered(bipartite.nU() + bipartite.nV(), std::move(edges));
}

}  // namespace ordex

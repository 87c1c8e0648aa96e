#include "ordex/containment.hpp"

#include <algorithm>
#include <numeric>

#include "ordex/detail/matcher.hpp"
#include "ordex/structure.hpp"

namespace ordex {

namespace {

void check_inputs(const PatternGraph& host, const PatternGraph& pattern) {
  if (host.flavor() != pattern.flavor())
    throw InputError("flavor mismatch: host is " + std::string(to_string(host.flavor())) +
                     ", pattern is " + std::string(to_string(pattern.flavor())));
  if (pattern.empty()) throw InputError("a pattern needs at least one edge");
}

Embedding to_embedding(const PatternGraph& pattern, const std::vector<int>& image) {
  Embedding e;
  if (pattern.is_bipartite()) {
    for (int u = 0; u < pattern.nU(); ++u) e.u_map.push_back(image[u] + 1);
    for (int v = 0; v < pattern.nV(); ++v) e.v_map.push_back(image[pattern.nU() + v] + 1);
  } else {
    for (int i = 0; i < pattern.nU(); ++i) e.u_map.push_back(image[i] + 1);
  }
  return e;
}

bool strictly_increasing(const std::vector<int>& values, int lo, int hi) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < lo || values[i] > hi) return false;
    if (i > 0 && values[i - 1] >= values[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<Embedding> contains(const PatternGraph& host, const PatternGraph& pattern) {
  check_inputs(host, pattern);
  detail::HostBits bits(host);
  std::vector<int> image;

  if (host.flavor() != Flavor::Cyclic) {
    auto compiled = detail::CompiledPattern::from(pattern);
    detail::Matcher matcher(compiled, bits);
    if (!matcher.find({}, &image)) return std::nullopt;
    return to_embedding(pattern, image);
  }

  // A cyclic-order-preserving map is a linear-order-preserving one once the
  // pattern is read from the right starting vertex.
  const int p = pattern.nU();
  for (int start = 0; start < p; ++start) {
    PatternGraph rotated = rotate_cyclic(pattern, start);
    auto compiled = detail::CompiledPattern::from(with_flavor(rotated, Flavor::Ordered));
    detail::Matcher matcher(compiled, bits);
    if (!matcher.find({}, &image)) continue;
    Embedding e;
    e.u_map.resize(p);
    for (int i = 0; i < p; ++i) e.u_map[i] = image[(i - start + p) % p] + 1;
    return e;
  }
  return std::nullopt;
}

bool is_valid_embedding(const PatternGraph& host, const PatternGraph& pattern,
                        const Embedding& embedding) {
  if (host.flavor() != pattern.flavor()) return false;
  if (static_cast<int>(embedding.u_map.size()) != pattern.nU()) return false;

  if (pattern.is_bipartite()) {
    if (static_cast<int>(embedding.v_map.size()) != pattern.nV()) return false;
    if (!strictly_increasing(embedding.u_map, 1, host.nU())) return false;
    if (!strictly_increasing(embedding.v_map, 1, host.nV())) return false;
    for (const auto& e : pattern.edges())
      if (!host.has_edge(embedding.u_map[e.first - 1], embedding.v_map[e.second - 1]))
        return false;
    return true;
  }

  if (!embedding.v_map.empty()) return false;
  const auto& map = embedding.u_map;
  if (pattern.flavor() == Flavor::Ordered) {
    if (!strictly_increasing(map, 1, host.nU())) return false;
  } else {
    for (int x : map)
      if (x < 1 || x > host.nU()) return false;
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    // Cyclically increasing: at most one descent around the circle.
    int descents = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] > map[(i + 1) % map.size()]) ++descents;
    if (map.size() > 1 && descents > 1) return false;
  }
  for (const auto& e : pattern.edges())
    if (!host.has_edge(map[e.first - 1], map[e.second - 1])) return false;
  return true;
}

Embedding identity_embedding(const PatternGraph& graph) {
  Embedding e;
  e.u_map.resize(graph.nU());
  std::iota(e.u_map.begin(), e.u_map.end(), 1);
  if (graph.is_bipartite()) {
    e.v_map.resize(graph.nV());
    std::iota(e.v_map.begin(), e.v_map.end(), 1);
  }
  return e;
}

}  // namespace ordex

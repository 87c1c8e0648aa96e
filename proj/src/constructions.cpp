#include "ordex/constructions.hpp"

#include <cmath>
#include <vector>

#include "ordex/random.hpp"

namespace ordex {

namespace {

std::vector<int> powers_below(int n, int base) {
  std::vector<int> out;
  for (std::int64_t p = 1; p < n; p *= base) out.push_back(static_cast<int>(p));
  return out;
}

// Simple path of exactly `remaining` more edges from `at` to `target`.
bool path_of_length(const std::vector<std::vector<int>>& adj, std::vector<char>& used, int at,
                    int target, int remaining) {
  if (remaining == 1) {
    for (int y : adj[at])
      if (y == target) return true;
    return false;
  }
  for (int y : adj[at]) {
    if (used[y] || y == target) continue;
    used[y] = 1;
    bool found = path_of_length(adj, used, y, target, remaining - 1);
    used[y] = 0;
    if (found) return true;
  }
  return false;
}

std::vector<std::vector<int>> adjacency_lists(const PatternGraph& g) {
  std::vector<std::vector<int>> adj(g.nU());
  for (const auto& e : g.edges()) {
    adj[e.first - 1].push_back(e.second - 1);
    adj[e.second - 1].push_back(e.first - 1);
  }
  return adj;
}

}  // namespace

PatternGraph power_distance_graph(int n, int base, Flavor flavor) {
  if (n < 2) throw InputError("power-distance graph needs n >= 2");
  if (base < 2) throw InputError("power-distance graph needs base >= 2");
  if (flavor == Flavor::Cyclic) throw InputError("power-distance graph is ordered or bipartite");
  std::vector<Edge> edges;
  for (int d : powers_below(n, base))
    for (int i = 1; i + d <= n; ++i) edges.push_back({i, i + d});
  return flavor == Flavor::Bipartite ? PatternGraph::bipartite(n, n, std::move(edges))
                                     : PatternGraph::ordered(n, std::move(edges));
}

std::int64_t power_distance_edge_count(int n, int base) {
  std::int64_t total = 0;
  for (int d : powers_below(n, base)) total += n - d;
  return total;
}

bool edge_on_k_cycle(const PatternGraph& graph, int a, int b, int k) {
  if (graph.is_bipartite()) throw InputError("cycle search runs on ordered graphs");
  auto adj = adjacency_lists(graph);
  std::vector<char> used(graph.nU(), 0);
  used[a - 1] = used[b - 1] = 1;
  return path_of_length(adj, used, b - 1, a - 1, k - 1);
}

bool has_k_cycle(const PatternGraph& graph, int k) {
  for (const auto& e : graph.edges())
    if (edge_on_k_cycle(graph, e.first, e.second, k)) return true;
  return false;
}

CkFreeResult random_ck_free(int n, int k, std::uint64_t seed) {
  if (k < 3) throw InputError("cycle length k must be at least 3");
  if (n < k) throw InputError("C_k-free construction needs n >= k");
  CkFreeResult result;
  const double nn = n;
  result.probability = std::pow(nn, (2.0 - k) / (k - 1.0)) / 2.0;
  result.target_edges = (0.25 - std::pow(2.0, -k - 1.0)) * std::pow(nn, k / (k - 1.0));

  Rng rng(seed);
  std::vector<Edge> drawn;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.bernoulli(result.probability)) drawn.push_back({i, j});
  result.drawn_edges = drawn.size();

  PatternGraph initial = PatternGraph::ordered(n, drawn);
  auto adj = adjacency_lists(initial);
  std::vector<char> used(n, 0);
  std::vector<Edge> kept;
  for (const auto& e : drawn) {
    used[e.first - 1] = used[e.second - 1] = 1;
    bool on_cycle = path_of_length(adj, used, e.second - 1, e.first - 1, k - 1);
    used[e.first - 1] = used[e.second - 1] = 0;
    if (!on_cycle) kept.push_back(e);
  }
  result.graph = PatternGraph::ordered(n, std::move(kept));
  return result;
}

VerificationReport verify_construction(const PatternGraph& graph, const PatternGraph& pattern) {
  VerificationReport report;
  report.witness = contains(graph, pattern);
  report.avoids = !report.witness.has_value();
  report.edge_count = graph.edge_count();
  report.density = graph.vertex_count() == 0
                       ? 0.0
                       : static_cast<double>(report.edge_count) / graph.vertex_count();
  return report;
}

}  // namespace ordex

#pragma once

// Exhaustive reference implementations. Nothing here calls the library's
// search code; only PatternGraph accessors and constructors are used.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "ordex/pattern_graph.hpp"

namespace oracle {

using ordex::Edge;
using ordex::Flavor;
using ordex::PatternGraph;

// Calls f on every increasing k-tuple drawn from 1..n. Stops when f returns true.
inline bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int next) -> bool {
    if (static_cast<int>(pick.size()) == k) return f(pick);
    for (int x = next; x <= n - (k - static_cast<int>(pick.size())) + 1; ++x) {
      pick.push_back(x);
      if (rec(x + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(1);
}

// Every order-preserving injection of the pattern's vertex set into the host's,
// as (u images, v images). Cyclic maps are increasing maps composed with a rotation.
inline void for_each_injection(
    const PatternGraph& host, const PatternGraph& pattern,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& f) {
  if (pattern.is_bipartite()) {
    for_each_subset(host.nU(), pattern.nU(), [&](const std::vector<int>& us) {
      return for_each_subset(host.nV(), pattern.nV(),
                             [&](const std::vector<int>& vs) { return f(us, vs); });
    });
    return;
  }
  const int n = host.nU();
  const int rotations = pattern.flavor() == Flavor::Cyclic ? std::max(n, 1) : 1;
  bool stop = false;
  for (int r = 0; r < rotations && !stop; ++r) {
    stop = for_each_subset(n, pattern.nU(), [&](const std::vector<int>& s) {
      std::vector<int> img(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) img[i] = (s[i] - 1 + r) % n + 1;
      return f(img, {});
    });
  }
}

inline bool maps_edges(const PatternGraph& host, const PatternGraph& pattern,
                       const std::vector<int>& us, const std::vector<int>& vs) {
  for (const Edge& e : pattern.edges()) {
    if (pattern.is_bipartite()) {
      if (!host.has_edge(us[e.first - 1], vs[e.second - 1])) return false;
    } else if (!host.has_edge(us[e.first - 1], us[e.second - 1])) {
      return false;
    }
  }
  return true;
}

inline bool contains(const PatternGraph& host, const PatternGraph& pattern) {
  bool found = false;
  for_each_injection(host, pattern, [&](const std::vector<int>& us, const std::vector<int>& vs) {
    found = maps_edges(host, pattern, us, vs);
    return found;
  });
  return found;
}

// Candidate edges of the complete host, in lexicographic order.
inline std::vector<Edge> cells(Flavor flavor, int n, int m) {
  std::vector<Edge> out;
  if (flavor == Flavor::Bipartite) {
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= m; ++v) out.push_back({u, v});
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  }
  return out;
}

inline PatternGraph complete(Flavor flavor, int n, int m) {
  auto all = cells(flavor, n, m);
  if (flavor == Flavor::Bipartite) return PatternGraph::bipartite(n, m, all);
  if (flavor == Flavor::Cyclic) return PatternGraph::cyclic(n, all);
  return PatternGraph::ordered(n, all);
}

// Maximum edge count over every subgraph of the complete host that avoids P.
// Each copy of P in the complete host is an edge mask; a subgraph avoids P iff
// it contains no copy mask.
inline std::size_t naive_max(Flavor flavor, int n, int m, const PatternGraph& pattern) {
  const auto all = cells(flavor, n, m);
  const PatternGraph full = complete(flavor, n, m);
  auto index = [&](int a, int b) {
    if (flavor != Flavor::Bipartite && a > b) std::swap(a, b);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i].first == a && all[i].second == b) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::uint32_t> copies;
  for_each_injection(full, pattern, [&](const std::vector<int>& us, const std::vector<int>& vs) {
    std::uint32_t mask = 0;
    for (const Edge& e : pattern.edges()) {
      const int i = pattern.is_bipartite() ? index(us[e.first - 1], vs[e.second - 1])
                                           : index(us[e.first - 1], us[e.second - 1]);
      mask |= 1u << i;
    }
    copies.push_back(mask);
    return false;
  });
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
  std::size_t best = 0;
  const std::uint32_t limit = 1u << all.size();
  for (std::uint32_t s = 0; s < limit; ++s) {
    const auto pc = static_cast<std::size_t>(std::popcount(s));
    if (pc <= best) continue;
    bool ok = true;
    for (std::uint32_t c : copies)
      if ((s & c) == c) {
        ok = false;
        break;
      }
    if (ok) best = pc;
  }
  return best;
}

// Minimum number of consecutive intervals without an inner edge, over all 2^(n-1) cut sets.
inline int brute_interval_chi(const PatternGraph& g) {
  const int n = g.nU();
  if (n == 0) return 0;
  int best = n;
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<int> block(n + 1, 0);
    for (int i = 2; i <= n; ++i) block[i] = block[i - 1] + ((cuts >> (i - 2)) & 1u);
    bool ok = true;
    for (const Edge& e : g.edges())
      if (block[e.first] == block[e.second]) ok = false;
    if (ok) best = std::min(best, block[n] + 1);
  }
  return best;
}

// Circular version: intervals of the cyclic order, tried under every rotation.
inline int brute_circular_chi(const PatternGraph& g) {
  const int n = g.nU();
  if (n == 0) return 0;
  int best = n;
  for (int r = 0; r < n; ++r) {
    std::vector<Edge> rotated;
    for (const Edge& e : g.edges()) {
      int a = (e.first - 1 - r + n) % n + 1, b = (e.second - 1 - r + n) % n + 1;
      rotated.push_back({std::min(a, b), std::max(a, b)});
    }
    best = std::min(best, brute_interval_chi(PatternGraph::ordered(n, rotated)));
  }
  return best;
}

inline bool perm_contains(const std::vector<int>& sigma, const std::vector<int>& pi) {
  const int n = static_cast<int>(sigma.size()), k = static_cast<int>(pi.size());
  return for_each_subset(n, k, [&](const std::vector<int>& pos) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if ((sigma[pos[a] - 1] < sigma[pos[b] - 1]) != (pi[a] < pi[b])) return false;
    return true;
  });
}

inline std::uint64_t brute_avoiding_perms(int n, const std::vector<int>& pi) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::uint64_t count = 0;
  do {
    if (!perm_contains(sigma, pi)) ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Exhaustive k-cycle test: some k distinct vertices in a cyclic sequence
// with all consecutive pairs adjacent. Smallest vertex first.
inline bool has_cycle_of_length(const PatternGraph& g, int k) {
  const int n = g.nU();
  std::vector<int> path;
  std::vector<char> used(n + 1, 0);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(path.size()) == k) return g.has_edge(path.back(), path.front());
    for (int x = path.front() + 1; x <= n; ++x) {
      if (used[x] || !g.has_edge(path.back(), x)) continue;
      used[x] = 1;
      path.push_back(x);
      if (rec()) return true;
      path.pop_back();
      used[x] = 0;
    }
    return false;
  };
  for (int s = 1; s <= n; ++s) {
    path = {s};
    used.assign(n + 1, 0);
    used[s] = 1;
    if (rec()) return true;
  }
  return false;
}

inline PatternGraph random_graph(Flavor flavor, int n, int m, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (const Edge& e : cells(flavor, n, m))
    if (coin(rng)) edges.push_back(e);
  if (flavor == Flavor::Bipartite) return PatternGraph::bipartite(n, m, edges);
  if (flavor == Flavor::Cyclic) return PatternGraph::cyclic(n, edges);
  return PatternGraph::ordered(n, edges);
}

// Pattern with 1..max_edges edges; vertex counts small enough that most
// random hosts are interesting. Isolated vertices may occur.
inline PatternGraph random_pattern(Flavor flavor, int max_edges, std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int n, m = 0;
  if (flavor == Flavor::Bipartite) {
    n = pick(1, 3);
    m = pick(1, 3);
  } else {
    n = pick(2, 5);
  }
  auto all = cells(flavor, n, m);
  std::shuffle(all.begin(), all.end(), rng);
  const int k = pick(1, std::min<int>(max_edges, static_cast<int>(all.size())));
  std::vector<Edge> edges(all.begin(), all.begin() + k);
  if (flavor == Flavor::Bipartite) return PatternGraph::bipartite(n, m, edges);
  if (flavor == Flavor::Cyclic) return PatternGraph::cyclic(n, edges);
  return PatternGraph::ordered(n, edges);
}

}  // namespace oracle

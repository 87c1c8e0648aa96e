#include "ordex/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ordex/cache.hpp"
#include "ordex/containment.hpp"
#include "ordex/detail/matcher.hpp"
#include "ordex/structure.hpp"

namespace ordex {

namespace {

using detail::CompiledPattern;
using detail::Forced;
using detail::HostBits;
using detail::Matcher;

// Detects copies of the pattern that use a freshly added host edge. Cyclic
// patterns are compiled once per distinct rotation and matched as ordered.
class IncrementalChecker {
 public:
  IncrementalChecker(const PatternGraph& pattern, const HostBits& host) {
    std::vector<PatternGraph> shapes;
    if (pattern.flavor() == Flavor::Cyclic) {
      for (int s = 0; s < pattern.nU(); ++s)
        shapes.push_back(with_flavor(rotate_cyclic(pattern, s), Flavor::Ordered));
      std::sort(shapes.begin(), shapes.end());
      shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    } else {
      shapes.push_back(pattern);
    }
    compiled_.reserve(shapes.size());
    for (const auto& s : shapes) compiled_.push_back(CompiledPattern::from(s));
    for (const auto& c : compiled_) matchers_.emplace_back(c, host);
  }

  // (a, b) is the new host edge, 0-based; (row, col) for bipartite hosts.
  bool creates_copy(int a, int b) {
    for (std::size_t i = 0; i < compiled_.size(); ++i) {
      for (const auto& [x, y] : compiled_[i].edges) {
        Forced forced[2] = {{x, a}, {y, b}};
        if (matchers_[i].find(forced)) return true;
      }
    }
    return false;
  }

 private:
  std::vector<CompiledPattern> compiled_;
  std::vector<Matcher> matchers_;
};

std::vector<Edge> candidate_edges(Flavor flavor, int n, int m) {
  std::vector<Edge> out;
  if (flavor == Flavor::Bipartite) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < m; ++v) out.push_back({u, v});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  }
  return out;
}

PatternGraph host_from(Flavor flavor, int n, int m, const std::vector<Edge>& zero_based) {
  std::vector<Edge> edges;
  edges.reserve(zero_based.size());
  for (const auto& e : zero_based) edges.push_back({e.first + 1, e.second + 1});
  switch (flavor) {
    case Flavor::Bipartite:
      return PatternGraph::bipartite(n, m, std::move(edges));
    case Flavor::Cyclic:
      return PatternGraph::cyclic(n, std::move(edges));
    default:
      return PatternGraph::ordered(n, std::move(edges));
  }
}

class BranchAndBound {
 public:
  BranchAndBound(Flavor flavor, int n, int m, const PatternGraph& pattern)
      : flavor_(flavor),
        n_(n),
        m_(m),
        candidates_(candidate_edges(flavor, n, m)),
        host_(flavor == Flavor::Bipartite, n, m),
        checker_(pattern, host_),
        chosen_(candidates_.size(), 0) {}

  std::pair<std::size_t, PatternGraph> run() {
    greedy();
    dfs(0, 0);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      if (best_set_[i]) edges.push_back(candidates_[i]);
    return {best_, host_from(flavor_, n_, m_, edges)};
  }

 private:
  bool try_add(std::size_t i) {
    const Edge& e = candidates_[i];
    host_.set_edge(e.first, e.second, true);
    if (checker_.creates_copy(e.first, e.second)) {
      host_.set_edge(e.first, e.second, false);
      return false;
    }
    return true;
  }

  void remove(std::size_t i) {
    host_.set_edge(candidates_[i].first, candidates_[i].second, false);
  }

  // Saturation in candidate order. Equals the first leaf of the include-first search.
  void greedy() {
    best_set_.assign(candidates_.size(), 0);
    best_ = 0;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (try_add(i)) {
        best_set_[i] = 1;
        ++best_;
      }
    }
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      if (best_set_[i]) remove(i);
  }

  void dfs(std::size_t index, std::size_t current) {
    const std::size_t remaining = candidates_.size() - index;
    if (current + remaining <= best_) return;
    if (index == candidates_.size()) {
      best_ = current;
      best_set_ = chosen_;
      return;
    }
    if (try_add(index)) {
      chosen_[index] = 1;
      dfs(index + 1, current + 1);
      chosen_[index] = 0;
      remove(index);
    }
    dfs(index + 1, current);
  }

  Flavor flavor_;
  int n_;
  int m_;
  std::vector<Edge> candidates_;
  HostBits host_;
  IncrementalChecker checker_;
  std::vector<char> chosen_;
  std::vector<char> best_set_;
  std::size_t best_ = 0;
};

void require_pattern(const PatternGraph& pattern) {
  if (pattern.empty()) throw InputError("pattern must have at least one edge");
}

void check_witness(const PatternGraph& witness, const PatternGraph& pattern, std::size_t value,
                   int n, int m) {
  bool dims = witness.nU() == n && witness.nV() == m && witness.flavor() == pattern.flavor();
  if (!dims || witness.edge_count() != value || contains(witness, pattern))
    throw std::logic_error("solver produced an invalid witness");
}

int cap_for(Flavor flavor, const SolverCaps& caps) {
  switch (flavor) {
    case Flavor::Bipartite:
      return caps.bipartite;
    case Flavor::Cyclic:
      return caps.cyclic;
    default:
      return caps.ordered;
  }
}

}  // namespace

ExtremalRecord max_edges_avoiding(Flavor flavor, int n, std::optional<int> m,
                                  const PatternGraph& pattern, const SolverCaps& caps,
                                  ResultCache* cache) {
  require_pattern(pattern);
  if (pattern.flavor() != flavor)
    throw InputError("flavor " + std::string(to_string(flavor)) + " does not match the " +
                     std::string(to_string(pattern.flavor())) + " pattern");
  const bool bip = flavor == Flavor::Bipartite;
  if (bip != m.has_value())
    throw InputError(bip ? "bipartite hosts need m" : "m applies to bipartite hosts only");
  if (n < 1 || (m && *m < 1)) throw InputError("host sizes must be positive");
  const int cap = cap_for(flavor, caps);
  if (n > cap || (m && *m > cap))
    throw RefusedError("size cap exceeded: " + std::string(to_string(flavor)) +
                       " hosts are limited to " + std::to_string(cap) +
                       (bip ? " vertices per part" : " vertices"));

  ExtremalRecord record;
  record.flavor = flavor;
  record.pattern = pattern;
  record.n = n;
  record.m = m.value_or(0);

  // Key problem: the canonical variant for bipartite patterns.
  PatternGraph key = pattern;
  BipartiteSymmetry symmetry;
  int kn = n;
  int km = m.value_or(0);
  if (bip) {
    auto canon = canonical_variant(pattern);
    key = canon.graph;
    symmetry = canon.symmetry;
    if (symmetry.transpose) std::swap(kn, km);
  }

  std::optional<CachedExtremal> stored;
  if (cache) stored = cache->load(flavor, key, kn, km);
  if (stored) {
    check_witness(stored->witness, key, stored->value, kn, km);
    record.from_cache = true;
  } else {
    BranchAndBound search(flavor, kn, km, key);
    auto [value, witness] = search.run();
    stored = CachedExtremal{flavor, key, kn, km, value, witness};
    check_witness(witness, key, value, kn, km);
    if (cache) cache->store(*stored);
  }

  record.value = stored->value;
  record.witness = bip ? apply(inverse(symmetry), stored->witness) : stored->witness;
  check_witness(record.witness, pattern, record.value, n, record.m);
  return record;
}

BigInt count_avoiders(int n, const PatternGraph& pattern, const SolverCaps& caps) {
  require_pattern(pattern);
  if (!pattern.is_bipartite()) throw InputError("avoider counting takes a bipartite pattern");
  if (n < 1) throw InputError("n must be positive");
  if (n > caps.count_avoiders)
    throw RefusedError("size cap exceeded: avoider counting is limited to n = " +
                       std::to_string(caps.count_avoiders));
  if (pattern.nU() > n || pattern.nV() > n) return BigInt(1) << (n * n);

  auto cells = candidate_edges(Flavor::Bipartite, n, n);
  HostBits host(true, n, n);
  IncrementalChecker checker(pattern, host);
  BigInt total = 0;
  // Once a partial matrix contains the pattern every completion does too, so
  // the include branch is cut there.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == cells.size()) {
      ++total;
      return;
    }
    const Edge& c = cells[i];
    host.set_edge(c.first, c.second, true);
    if (!checker.creates_copy(c.first, c.second)) walk(i + 1);
    host.set_edge(c.first, c.second, false);
    walk(i + 1);
  };
  walk(0);
  return total;
}

namespace {

// Whether some occurrence of pi in `prefix` uses the last prefix position as
// the occurrence's last element.
bool occurrence_at_end(const std::vector<int>& prefix, const std::vector<int>& pi) {
  const int k = static_cast<int>(pi.size());
  const int last = static_cast<int>(prefix.size()) - 1;
  std::vector<int> chosen(k);
  chosen[k - 1] = last;
  auto consistent = [&](int a, int b) {
    return (prefix[chosen[a]] < prefix[chosen[b]]) == (pi[a] < pi[b]);
  };
  std::function<bool(int, int)> pick = [&](int slot, int from) {
    if (slot == k - 1) return true;
    int slots_left = k - 1 - slot;
    for (int p = from; p <= last - slots_left; ++p) {
      chosen[slot] = p;
      bool ok = consistent(slot, k - 1);
      for (int s = 0; ok && s < slot; ++s) ok = consistent(s, slot);
      if (ok && pick(slot + 1, p + 1)) return true;
    }
    return false;
  };
  return pick(0, 0);
}

}  // namespace

BigInt count_avoiding_permutations(int n, const Permutation& pi, const SolverCaps& caps) {
  if (n < 1) throw InputError("n must be positive");
  if (pi.size() < 1) throw InputError("pattern permutation must be non-empty");
  if (n > caps.count_perms)
    throw RefusedError("size cap exceeded: permutation counting is limited to n = " +
                       std::to_string(caps.count_perms));
  if (pi.size() > n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  }
  std::vector<int> prefix;
  std::vector<char> used(n + 1, 0);
  std::uint64_t total = 0;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(prefix.size()) == n) {
      ++total;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      if (static_cast<int>(prefix.size()) < pi.size() || !occurrence_at_end(prefix, pi.values())) {
        used[v] = 1;
        extend();
        used[v] = 0;
      }
      prefix.pop_back();
    }
  };
  extend();
  return BigInt(total);
}

std::vector<GrowthRow> growth_table(const PatternGraph& pattern, int n_min, int n_max,
                                    const SolverCaps& caps, ResultCache* cache) {
  if (n_min < 1 || n_max < n_min) throw InputError("need 1 <= n-min <= n-max");
  const bool bip = pattern.is_bipartite();
  std::vector<GrowthRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    auto rec = max_edges_avoiding(pattern.flavor(), n, bip ? std::optional<int>(n) : std::nullopt,
                                  pattern, caps, cache);
    GrowthRow row;
    row.n = n;
    row.value = rec.value;
    row.per_n = static_cast<double>(rec.value) / n;
    if (n > 1) row.per_n_log_n = static_cast<double>(rec.value) / (n * std::log2(n));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ordex

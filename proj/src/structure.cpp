#include "ordex/structure.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <queue>
#include <stdexcept>

#include "ordex/random.hpp"

namespace ordex {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw InputError(message);
}

// Underlying simple graph on global ids (Bipartite: U then V).
std::vector<std::vector<int>> underlying_adjacency(const PatternGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    int a = e.first - 1;
    int b = g.is_bipartite() ? g.nU() + e.second - 1 : e.second - 1;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> component_labels(const PatternGraph& g, int* count) {
  auto adj = underlying_adjacency(g);
  std::vector<int> label(adj.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    label[s] = next;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (label[y] < 0) {
          label[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  *count = next;
  return label;
}

int greedy_intervals(int n, const std::vector<std::vector<int>>& adj) {
  if (n == 0) return 1;
  int count = 1;
  int start = 0;
  for (int v = 1; v < n; ++v) {
    bool clash = std::any_of(adj[v].begin(), adj[v].end(),
                             [&](int w) { return w >= start && w < v; });
    if (clash) {
      ++count;
      start = v;
    }
  }
  return count;
}

}  // namespace

int interval_chromatic_number(const PatternGraph& graph) {
  require(graph.flavor() == Flavor::Ordered, "interval chromatic number needs an ordered graph");
  return greedy_intervals(graph.nU(), underlying_adjacency(graph));
}

int circular_chromatic_number(const PatternGraph& graph) {
  require(graph.flavor() == Flavor::Cyclic, "circular chromatic number needs a cyclic graph");
  const int n = graph.nU();
  if (n == 0) return 1;
  int best = n;
  for (int start = 0; start < n; ++start)
    best = std::min(best, greedy_intervals(n, underlying_adjacency(rotate_cyclic(graph, start))));
  return best;
}

PatternGraph rotate_cyclic(const PatternGraph& graph, int start) {
  require(!graph.is_bipartite(), "rotation needs an ordered or cyclic graph");
  const int n = graph.nU();
  std::vector<Edge> edges;
  for (const auto& e : graph.edges())
    edges.push_back({(e.first - 1 - start + n) % n + 1, (e.second - 1 - start + n) % n + 1});
  return graph.flavor() == Flavor::Cyclic ? PatternGraph::cyclic(n, std::move(edges))
                                          : PatternGraph::ordered(n, std::move(edges));
}

std::string BipartiteSymmetry::name() const {
  if (!reverse_rows && !reverse_cols && !transpose) return "identity";
  std::string out;
  auto add = [&out](const char* part) {
    if (!out.empty()) out += "+";
    out += part;
  };
  if (reverse_rows) add("reverse-rows");
  if (reverse_cols) add("reverse-cols");
  if (transpose) add("transpose");
  return out;
}

std::vector<BipartiteSymmetry> BipartiteSymmetry::all() {
  std::vector<BipartiteSymmetry> out;
  for (int t = 0; t < 2; ++t)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) out.push_back({r == 1, c == 1, t == 1});
  return out;
}

Edge apply_to_cell(const BipartiteSymmetry& s, int nU, int nV, Edge cell) {
  if (s.reverse_rows) cell.first = nU + 1 - cell.first;
  if (s.reverse_cols) cell.second = nV + 1 - cell.second;
  if (s.transpose) std::swap(cell.first, cell.second);
  return cell;
}

PatternGraph apply(const BipartiteSymmetry& s, const PatternGraph& bipartite) {
  require(bipartite.is_bipartite(), "symmetries act on bipartite graphs");
  std::vector<Edge> edges;
  edges.reserve(bipartite.edge_count());
  for (const auto& e : bipartite.edges())
    edges.push_back(apply_to_cell(s, bipartite.nU(), bipartite.nV(), e));
  return s.transpose ? PatternGraph::bipartite(bipartite.nV(), bipartite.nU(), std::move(edges))
                     : PatternGraph::bipartite(bipartite.nU(), bipartite.nV(), std::move(edges));
}

BipartiteSymmetry inverse(const BipartiteSymmetry& s) {
  if (!s.transpose) return s;
  return {s.reverse_cols, s.reverse_rows, true};
}

std::vector<PatternGraph> bipartite_variants(const PatternGraph& bipartite) {
  std::vector<PatternGraph> out;
  for (const auto& s : BipartiteSymmetry::all()) out.push_back(apply(s, bipartite));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CanonicalVariant canonical_variant(const PatternGraph& bipartite) {
  std::optional<CanonicalVariant> best;
  for (const auto& s : BipartiteSymmetry::all()) {
    PatternGraph image = apply(s, bipartite);
    if (!best || image < best->graph) best = CanonicalVariant{std::move(image), s};
  }
  return *best;
}

PatternGraph split_regularize(const PatternGraph& bipartite, int q,
                              std::optional<std::uint64_t> seed) {
  require(bipartite.is_bipartite(), "splitting needs a bipartite graph");
  require(q >= 1, "split degree q must be at least 1");
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);

  std::vector<Edge> edges;
  int next_u = 0;
  for (int u = 1; u <= bipartite.nU(); ++u) {
    auto span = bipartite.row_neighbors(u);
    std::vector<int> nbrs(span.begin(), span.end());
    if (rng) rng->shuffle(nbrs);
    const int pieces = static_cast<int>(nbrs.size()) / q;
    std::vector<int> order(pieces);
    std::iota(order.begin(), order.end(), 0);
    if (rng) rng->shuffle(order);
    for (int piece : order) {
      ++next_u;
      for (int i = 0; i < q; ++i) edges.push_back({next_u, nbrs[piece * q + i]});
    }
  }
  return PatternGraph::bipartite(next_u, bipartite.nV(), std::move(edges));
}

std::vector<PatternGraph> layered_decomposition(const PatternGraph& ordered) {
  require(ordered.flavor() == Flavor::Ordered, "layered decomposition needs an ordered graph");
  const std::int64_t n = ordered.nU();
  int levels = 0;
  while ((std::int64_t{1} << levels) < n) ++levels;  // ceil(log2 n)

  std::vector<std::vector<Edge>> layer_edges(levels + 1);
  for (const auto& e : ordered.edges()) {
    const std::int64_t j = e.first - 1;
    const std::int64_t k = e.second - 1;
    int layer = -1;
    for (int i = 0; i <= levels && layer < 0; ++i) {
      std::int64_t a = std::int64_t{1} << i;
      std::int64_t b = a << 1;
      if (a * j / n == a * k / n && b * j / n != b * k / n) layer = i;
    }
    if (layer < 0) throw std::logic_error("edge fits no layer");
    layer_edges[layer].push_back(e);
  }
  std::vector<PatternGraph> layers;
  for (auto& edges : layer_edges)
    layers.push_back(PatternGraph::ordered(static_cast<int>(n), std::move(edges)));
  return layers;
}

std::vector<PatternGraph> connected_components(const PatternGraph& graph) {
  int count = 0;
  auto label = component_labels(graph, &count);
  std::vector<PatternGraph> out;
  for (int c = 0; c < count; ++c) {
    if (graph.is_bipartite()) {
      std::vector<int> new_u(graph.nU() + 1, 0);
      std::vector<int> new_v(graph.nV() + 1, 0);
      int nu = 0;
      int nv = 0;
      for (int u = 1; u <= graph.nU(); ++u)
        if (label[u - 1] == c) new_u[u] = ++nu;
      for (int v = 1; v <= graph.nV(); ++v)
        if (label[graph.nU() + v - 1] == c) new_v[v] = ++nv;
      std::vector<Edge> edges;
      for (const auto& e : graph.edges())
        if (label[e.first - 1] == c) edges.push_back({new_u[e.first], new_v[e.second]});
      out.push_back(PatternGraph::bipartite(nu, nv, std::move(edges)));
    } else {
      std::vector<int> renumber(graph.nU() + 1, 0);
      int n = 0;
      for (int i = 1; i <= graph.nU(); ++i)
        if (label[i - 1] == c) renumber[i] = ++n;
      std::vector<Edge> edges;
      for (const auto& e : graph.edges())
        if (label[e.first - 1] == c) edges.push_back({renumber[e.first], renumber[e.second]});
      out.push_back(graph.flavor() == Flavor::Cyclic ? PatternGraph::cyclic(n, std::move(edges))
                                                   : PatternGraph::ordered(n, std::move(edges)));
    }
  }
  return out;
}

std::optional<int> underlying_shortest_cycle(const PatternGraph& graph) {
  auto adj = underlying_adjacency(graph);
  const int n = static_cast<int>(adj.size());
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool is_forest(const PatternGraph& graph) {
  int components = 0;
  component_labels(graph, &components);
  return static_cast<int>(graph.edge_count()) == graph.vertex_count() - components;
}

bool is_tree(const PatternGraph& graph) {
  int components = 0;
  component_labels(graph, &components);
  return components == 1 &&
         static_cast<int>(graph.edge_count()) == graph.vertex_count() - 1;
}

PatternGraph delete_vertices(const PatternGraph& graph, std::vector<int> vertices, bool from_v) {
  const bool bip = graph.is_bipartite();
  require(!from_v || bip, "only bipartite graphs have a V part");
  const int size = from_v ? graph.nV() : graph.nU();
  std::vector<char> gone(size + 1, 0);
  for (int x : vertices) {
    require(x >= 1 && x <= size, "vertex to delete is out of range");
    gone[x] = 1;
  }
  std::vector<int> renumber(size + 1, 0);
  int kept = 0;
  for (int i = 1; i <= size; ++i)
    if (!gone[i]) renumber[i] = ++kept;

  std::vector<Edge> edges;
  for (const auto& e : graph.edges()) {
    if (bip) {
      if (from_v) {
        if (!gone[e.second]) edges.push_back({e.first, renumber[e.second]});
      } else if (!gone[e.first]) {
        edges.push_back({renumber[e.first], e.second});
      }
    } else if (!gone[e.first] && !gone[e.second]) {
      edges.push_back({renumber[e.first], renumber[e.second]});
    }
  }
  if (bip)
    return from_v ? PatternGraph::bipartite(graph.nU(), kept, std::move(edges))
                  : PatternGraph::bipartite(kept, graph.nV(), std::move(edges));
  return graph.flavor() == Flavor::Cyclic ? PatternGraph::cyclic(kept, std::move(edges))
                                          : PatternGraph::ordered(kept, std::move(edges));
}

IsolatedRemoval remove_isolated_vertices(const PatternGraph& graph) {
  IsolatedRemoval out;
  if (graph.is_bipartite()) {
    std::vector<int> rows;
    std::vector<int> cols;
    for (int u = 1; u <= graph.nU(); ++u)
      if (graph.row_degree(u) == 0) rows.push_back(u);
    for (int v = 1; v <= graph.nV(); ++v)
      if (graph.col_degree(v) == 0) cols.push_back(v);
    out.removed_u = static_cast<int>(rows.size());
    out.removed_v = static_cast<int>(cols.size());
    out.graph = delete_vertices(delete_vertices(graph, rows, false), cols, true);
  } else {
    std::vector<int> isolated;
    for (int i = 1; i <= graph.nU(); ++i)
      if (graph.degree(i) == 0) isolated.push_back(i);
    out.removed_u = static_cast<int>(isolated.size());
    out.graph = delete_vertices(graph, isolated);
  }
  return out;
}

PatternGraph induced_block(const PatternGraph& bipartite, int u_lo, int u_hi, int v_lo, int v_hi) {
  require(bipartite.is_bipartite(), "induced_block needs a bipartite graph");
  std::vector<Edge> edges;
  for (const auto& e : bipartite.edges())
    if (e.first >= u_lo && e.first <= u_hi && e.second >= v_lo && e.second <= v_hi)
      edges.push_back({e.first - u_lo + 1, e.second - v_lo + 1});
  return PatternGraph::bipartite(std::max(0, u_hi - u_lo + 1), std::max(0, v_hi - v_lo + 1),
                                 std::move(edges));
}

PatternGraph split_into_parts(const PatternGraph& ordered) {
  require(ordered.flavor() == Flavor::Ordered, "split_into_parts needs an ordered graph");
  const int n = ordered.nU();
  int boundary = n + 1;  // first vertex of the second interval
  int start = 1;
  int intervals = 1;
  for (int v = 2; v <= n; ++v) {
    auto nbrs = ordered.neighbors(v);
    bool clash = std::any_of(nbrs.begin(), nbrs.end(), [&](int w) { return w >= start && w < v; });
    if (clash) {
      ++intervals;
      start = v;
      if (intervals == 2) boundary = v;
    }
  }
  if (intervals > 2) throw InputError("ordered graph has interval chromatic number above 2");
  std::vector<Edge> edges;
  for (const auto& e : ordered.edges()) edges.push_back({e.first, e.second - boundary + 1});
  return PatternGraph::bipartite(boundary - 1, n - boundary + 1, std::move(edges));
}

PatternGraph with_edges(const PatternGraph& graph, std::vector<Edge> edges) {
  switch (graph.flavor()) {
    case Flavor::Bipartite:
      return PatternGraph::bipartite(graph.nU(), graph.nV(), std::move(edges));
    case Flavor::Cyclic:
      return PatternGraph::cyclic(graph.nU(), std::move(edges));
    case Flavor::Ordered:
      break;
  }
  return PatternGraph::ordered(graph.nU(), std::move(edges));
}

std::optional<ExtendedHat> find_double_extended_hat(const PatternGraph& g) {
  require(g.is_bipartite(), "hats live in bipartite graphs");
  for (int a = 1; a <= g.nU(); ++a) {
    auto feet = g.row_neighbors(a);
    for (std::size_t i = 0; i < feet.size(); ++i) {
      for (std::size_t j = i + 1; j < feet.size(); ++j) {
        const int x = feet[i];
        const int y = feet[j];
        const int width = y - x;
        std::optional<Hat> left;
        for (int b = 1; b < a && !left; ++b) {
          if (!g.has_edge(b, x)) continue;
          for (int z : g.row_neighbors(b))
            if (2 * (z - x) > width && z < y) {
              left = Hat{b, x, z};
              break;
            }
        }
        if (!left) continue;
        std::optional<Hat> right;
        for (int c = a + 1; c <= g.nU() && !right; ++c) {
          if (!g.has_edge(c, y)) continue;
          for (int w : g.row_neighbors(c))
            if (w > x && 2 * (y - w) > width) {
              right = Hat{c, w, y};
              break;
            }
        }
        if (right) return ExtendedHat{*left, Hat{a, x, y}, *right};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ordex

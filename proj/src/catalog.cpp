#include "ordex/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ordex {

namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError(std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto at = text.find(sep, start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw InputError("not a permutation of 1.." + std::to_string(values_.size()));
}

Permutation Permutation::parse(std::string_view word) {
  std::vector<int> values;
  if (word.find(',') != std::string_view::npos) {
    for (auto part : split(word, ',')) values.push_back(parse_int(part, "permutation entry"));
  } else {
    for (char c : word) {
      if (c < '1' || c > '9') throw InputError("bad permutation word '" + std::string(word) + "'");
      values.push_back(c - '0');
    }
  }
  if (values.empty()) throw InputError("empty permutation");
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int k) {
  std::vector<int> values(k);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

std::vector<Permutation> Permutation::all(int k) {
  std::vector<int> values(k);
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::string Permutation::word() const {
  std::string out;
  bool wide = values_.size() > 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

PatternGraph generalized_matching(int m, const Permutation& pi, Flavor flavor) {
  if (m < 1) throw InputError("m-tuple matching needs m >= 1");
  const int k = pi.size();
  std::vector<Edge> edges;
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= m; ++i) {
      int target = i + m * (pi(j) - 1);
      if (flavor == Flavor::Bipartite)
        edges.push_back({j, target});
      else
        edges.push_back({j, k + target});
    }
  switch (flavor) {
    case Flavor::Bipartite:
      return PatternGraph::bipartite(k, m * k, std::move(edges));
    case Flavor::Cyclic:
      return PatternGraph::cyclic((m + 1) * k, std::move(edges));
    case Flavor::Ordered:
      break;
  }
  return PatternGraph::ordered((m + 1) * k, std::move(edges));
}

PatternGraph keszegh_h(int k) {
  if (k < 1) throw InputError("H_k needs k >= 1");
  const int size = 3 * k + 4;
  std::vector<Edge> edges{{4, 1}, {1, 2}, {1, 3}, {3 * k + 3, 3 * k + 4}, {3 * k + 2, 3 * k + 4}};
  for (int i = 1; i <= k; ++i) {
    edges.push_back({3 * i + 4, 3 * i + 1});
    edges.push_back({3 * i - 1, 3 * i + 3});
    edges.push_back({3 * i, 3 * i + 2});
  }
  return PatternGraph::bipartite(size, size, std::move(edges));
}

PatternGraph sailboat() {
  return PatternGraph::bipartite(3, 4, {{1, 1}, {2, 1}, {3, 2}, {1, 3}, {2, 4}, {3, 4}});
}

PatternGraph ordered_turan(int n, int r) {
  if (r < 1 || n < r) throw InputError("ordered Turan graph needs 1 <= r <= n");
  std::vector<int> cls(n + 1);
  int v = 1;
  for (int c = 0; c < r; ++c) {
    int size = n / r + (c < n % r ? 1 : 0);
    for (int i = 0; i < size; ++i) cls[v++] = c;
  }
  std::vector<Edge> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (cls[a] != cls[b]) edges.push_back({a, b});
  return PatternGraph::ordered(n, std::move(edges));
}

PatternGraph nested_crossing_pattern() {
  return PatternGraph::ordered(4, {{1, 3}, {1, 4}, {2, 4}});
}

PatternGraph complete_graph(Flavor flavor, int n, int m) {
  std::vector<Edge> edges;
  if (flavor == Flavor::Bipartite) {
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= m; ++v) edges.push_back({u, v});
    return PatternGraph::bipartite(n, m, std::move(edges));
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) edges.push_back({a, b});
  return flavor == Flavor::Cyclic ? PatternGraph::cyclic(n, std::move(edges))
                                  : PatternGraph::ordered(n, std::move(edges));
}

PatternGraph generate(std::string_view name) {
  auto parts = split(name, ':');
  if (parts[0] == "sailboat" && parts.size() == 1) return sailboat();
  if (parts[0] == "H" && parts.size() == 2) return keszegh_h(parse_int(parts[1], "k"));
  if (parts[0] == "match" && parts.size() == 4)
    return generalized_matching(parse_int(parts[1], "m"), Permutation::parse(parts[2]),
                                parse_flavor(parts[3]));
  if (parts[0] == "turan" && parts.size() == 3)
    return ordered_turan(parse_int(parts[1], "n"), parse_int(parts[2], "r"));
  throw InputError("unknown generator '" + std::string(name) +
                   "' (expected sailboat, H:<k>, match:<m>:<perm>:<flavor> or turan:<n>:<r>)");
}

}  // namespace ordex

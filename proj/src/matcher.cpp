#include "ordex/detail/matcher.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace ordex::detail {

namespace {

inline bool test_bit(const std::uint64_t* bits, int i) {
  return (bits[i >> 6] >> (i & 63)) & 1u;
}

inline void clear_below(std::uint64_t* bits, int words, int lo) {
  if (lo <= 0) return;
  int w = lo >> 6;
  for (int i = 0; i < std::min(w, words); ++i) bits[i] = 0;
  if (w < words) bits[w] &= ~((std::uint64_t{1} << (lo & 63)) - 1);
}

inline void clear_above(std::uint64_t* bits, int words, int hi) {
  if (hi < 0) {
    std::fill(bits, bits + words, 0);
    return;
  }
  int w = hi >> 6;
  if (w >= words) return;
  int keep = (hi & 63) + 1;
  if (keep < 64) bits[w] &= (std::uint64_t{1} << keep) - 1;
  for (int i = w + 1; i < words; ++i) bits[i] = 0;
}

inline int first_bit(const std::uint64_t* bits, int words) {
  for (int i = 0; i < words; ++i)
    if (bits[i]) return i * 64 + std::countr_zero(bits[i]);
  return -1;
}

inline int last_bit(const std::uint64_t* bits, int words) {
  for (int i = words - 1; i >= 0; --i)
    if (bits[i]) return i * 64 + 63 - std::countl_zero(bits[i]);
  return -1;
}

inline int popcount(const std::uint64_t* bits, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(bits[i]);
  return c;
}

inline int count_range(const std::uint64_t* bits, int words, int lo, int hi) {
  int c = 0;
  for (int i = 0; i < words; ++i) {
    std::uint64_t w = bits[i];
    int base = i * 64;
    if (base + 63 < lo || base > hi) continue;
    if (lo > base) w &= ~((std::uint64_t{1} << (lo - base)) - 1);
    if (hi < base + 63) w &= (std::uint64_t{1} << (hi - base + 1)) - 1;
    c += std::popcount(w);
  }
  return c;
}

}  // namespace

HostBits::HostBits(bool bipartite, int rows, int cols)
    : bipartite_(bipartite), rows_(rows), cols_(bipartite ? cols : 0) {
  row_words_ = words_for(rows_);
  col_words_ = words_for(cols_);
  int row_bits_width = bipartite_ ? col_words_ : row_words_;
  row_bits_.assign(static_cast<std::size_t>(rows_) * row_bits_width, 0);
  if (bipartite_) col_bits_.assign(static_cast<std::size_t>(cols_) * row_words_, 0);
}

HostBits::HostBits(const PatternGraph& graph)
    : HostBits(graph.is_bipartite(), graph.rows(), graph.cols()) {
  for (const auto& e : graph.edges()) set_edge(e.first - 1, e.second - 1, true);
}

const std::uint64_t* HostBits::adj(int part, int h) const {
  if (part == 0)
    return &row_bits_[static_cast<std::size_t>(h) * (bipartite_ ? col_words_ : row_words_)];
  return &col_bits_[static_cast<std::size_t>(h) * row_words_];
}

std::uint64_t* HostBits::adj_mut(int part, int h) {
  return const_cast<std::uint64_t*>(adj(part, h));
}

bool HostBits::has_edge(int a, int b) const { return test_bit(adj(0, a), b); }

void HostBits::set_edge(int a, int b, bool present) {
  auto apply = [present](std::uint64_t* bits, int i) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (present)
      bits[i >> 6] |= mask;
    else
      bits[i >> 6] &= ~mask;
  };
  apply(adj_mut(0, a), b);
  if (bipartite_)
    apply(adj_mut(1, b), a);
  else
    apply(adj_mut(0, b), a);
}

CompiledPattern CompiledPattern::from(const PatternGraph& pattern) {
  CompiledPattern c;
  c.bipartite = pattern.is_bipartite();
  c.count = pattern.vertex_count();
  c.part.assign(c.count, 0);
  c.pos.assign(c.count, 0);
  c.adj.assign(c.count, {});
  c.fwd_degree.assign(c.count, 0);
  c.bwd_degree.assign(c.count, 0);
  c.members.assign(c.bipartite ? 2 : 1, {});
  if (c.bipartite) {
    c.part_size[0] = pattern.nU();
    c.part_size[1] = pattern.nV();
    for (int u = 0; u < pattern.nU(); ++u) {
      c.pos[u] = u;
      c.members[0].push_back(u);
    }
    for (int v = 0; v < pattern.nV(); ++v) {
      int x = pattern.nU() + v;
      c.part[x] = 1;
      c.pos[x] = v;
      c.members[1].push_back(x);
    }
    for (const auto& e : pattern.edges()) {
      int a = e.first - 1;
      int b = pattern.nU() + e.second - 1;
      c.adj[a].push_back(b);
      c.adj[b].push_back(a);
      c.edges.emplace_back(a, b);
    }
  } else {
    c.part_size[0] = pattern.nU();
    for (int i = 0; i < pattern.nU(); ++i) {
      c.pos[i] = i;
      c.members[0].push_back(i);
    }
    for (const auto& e : pattern.edges()) {
      int a = e.first - 1;
      int b = e.second - 1;
      c.adj[a].push_back(b);
      c.adj[b].push_back(a);
      ++c.fwd_degree[a];
      ++c.bwd_degree[b];
      c.edges.emplace_back(a, b);
    }
  }
  return c;
}

Matcher::Matcher(const CompiledPattern& pattern, const HostBits& host)
    : pattern_(pattern), host_(host) {
  words_ = std::max(host_.words(0), host_.bipartite() ? host_.words(1) : 0);
  words_ = std::max(words_, 1);
  std::size_t levels = static_cast<std::size_t>(pattern_.count) + 1;
  domains_.assign(levels * pattern_.count * words_, 0);
  assigned_.assign(levels * pattern_.count, 0);
}

bool Matcher::initialise(std::span<const Forced> forced) {
  const int parts = pattern_.bipartite ? 2 : 1;
  for (int p = 0; p < parts; ++p)
    if (pattern_.part_size[p] > host_.part_size(p)) return false;

  // Host degree profile, used to discard vertices that cannot carry a pattern vertex.
  std::vector<int> host_degree[2];
  std::vector<int> host_fwd;
  std::vector<int> host_bwd;
  for (int p = 0; p < parts; ++p) {
    int other_words = pattern_.bipartite ? host_.words(1 - p) : host_.words(0);
    int size = host_.part_size(p);
    host_degree[p].resize(size);
    for (int h = 0; h < size; ++h)
      host_degree[p][h] = popcount(host_.adj(p, h), other_words);
  }
  if (!pattern_.bipartite) {
    int n = host_.part_size(0);
    host_fwd.resize(n);
    host_bwd.resize(n);
    for (int h = 0; h < n; ++h) {
      host_bwd[h] = count_range(host_.adj(0, h), host_.words(0), 0, h - 1);
      host_fwd[h] = host_degree[0][h] - host_bwd[h];
    }
  }

  for (int x = 0; x < pattern_.count; ++x) {
    int p = pattern_.part[x];
    int size = host_.part_size(p);
    int lo = pattern_.pos[x];
    int hi = size - pattern_.part_size[p] + pattern_.pos[x];
    std::uint64_t* d = dom(0, x);
    int degree = static_cast<int>(pattern_.adj[x].size());
    for (int h = lo; h <= hi; ++h) {
      if (pattern_.bipartite) {
        if (host_degree[p][h] < degree) continue;
      } else if (host_fwd[h] < pattern_.fwd_degree[x] ||
                 host_bwd[h] < pattern_.bwd_degree[x]) {
        continue;
      }
      d[h >> 6] |= std::uint64_t{1} << (h & 63);
    }
  }

  for (const auto& [x, h] : forced) {
    if (assigned_[x]) {
      if (!test_bit(dom(0, x), h)) return false;
      continue;
    }
    if (!test_bit(dom(0, x), h)) return false;
    if (!assign(0, x, h)) return false;
  }
  return tighten_chains(0);
}

bool Matcher::assign(int level, int x, int h) {
  std::uint64_t* d = dom(level, x);
  std::fill(d, d + words_, 0);
  d[h >> 6] |= std::uint64_t{1} << (h & 63);
  assigned_[static_cast<std::size_t>(level) * pattern_.count + x] = 1;

  const int p = pattern_.part[x];
  const std::uint64_t* nbrs = host_.adj(p, h);
  int nbr_words = pattern_.bipartite ? host_.words(1 - p) : host_.words(0);
  for (int y : pattern_.adj[x]) {
    std::uint64_t* dy = dom(level, y);
    bool any = false;
    for (int i = 0; i < nbr_words; ++i) {
      dy[i] &= nbrs[i];
      any |= dy[i] != 0;
    }
    for (int i = nbr_words; i < words_; ++i) dy[i] = 0;
    if (!any) return false;
  }
  return true;
}

bool Matcher::tighten_chains(int level) {
  for (int round = 0; round < 8; ++round) {
    if (!order_pass(level)) return false;
    bool changed = false;
    if (!support_pass(level, &changed)) return false;
    if (!changed) return true;
  }
  return order_pass(level);
}

bool Matcher::support_pass(int level, bool* changed) {
  const char* assigned = &assigned_[static_cast<std::size_t>(level) * pattern_.count];
  std::vector<std::uint64_t>& support = scratch_;
  support.assign(words_, 0);
  for (int y = 0; y < pattern_.count; ++y) {
    if (assigned[y]) continue;
    std::uint64_t* dy = dom(level, y);
    for (int x : pattern_.adj[y]) {
      if (assigned[x]) continue;
      std::fill(support.begin(), support.end(), 0);
      const std::uint64_t* dx = dom(level, x);
      const int px = pattern_.part[x];
      const int nbr_words = pattern_.bipartite ? host_.words(1 - px) : host_.words(0);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = dx[w];
        while (bits) {
          int h = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* nb = host_.adj(px, h);
          for (int i = 0; i < nbr_words; ++i) support[i] |= nb[i];
        }
      }
      bool any = false;
      for (int i = 0; i < words_; ++i) {
        std::uint64_t next = dy[i] & support[i];
        if (next != dy[i]) *changed = true;
        dy[i] = next;
        any |= next != 0;
      }
      if (!any) return false;
    }
  }
  return true;
}

bool Matcher::order_pass(int level) {
  for (const auto& members : pattern_.members) {
    int prev = std::numeric_limits<int>::min() / 2;
    for (int x : members) {
      std::uint64_t* d = dom(level, x);
      clear_below(d, words_, prev + 1);
      int m = first_bit(d, words_);
      if (m < 0) return false;
      prev = m;
    }
    int next = std::numeric_limits<int>::max() / 2;
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      std::uint64_t* d = dom(level, *it);
      clear_above(d, words_, next - 1);
      int m = last_bit(d, words_);
      if (m < 0) return false;
      next = m;
    }
  }
  return true;
}

bool Matcher::search(int level) {
  const char* assigned = &assigned_[static_cast<std::size_t>(level) * pattern_.count];
  int best = -1;
  int best_size = std::numeric_limits<int>::max();
  int best_degree = -1;
  for (int x = 0; x < pattern_.count; ++x) {
    if (assigned[x]) continue;
    int size = popcount(dom(level, x), words_);
    int degree = static_cast<int>(pattern_.adj[x].size());
    if (size < best_size || (size == best_size && degree > best_degree)) {
      best = x;
      best_size = size;
      best_degree = degree;
    }
  }
  if (best < 0) {
    result_.assign(pattern_.count, -1);
    for (int x = 0; x < pattern_.count; ++x)
      result_[x] = first_bit(dom(level, x), words_);
    return true;
  }

  const std::size_t block = static_cast<std::size_t>(pattern_.count) * words_;
  std::vector<std::uint64_t> candidates(dom(level, best), dom(level, best) + words_);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = candidates[w];
    while (bits) {
      int h = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      std::copy_n(dom(level, 0), block, dom(level + 1, 0));
      std::copy_n(&assigned_[static_cast<std::size_t>(level) * pattern_.count],
                  pattern_.count,
                  &assigned_[static_cast<std::size_t>(level + 1) * pattern_.count]);
      if (assign(level + 1, best, h) && tighten_chains(level + 1) && search(level + 1))
        return true;
    }
  }
  return false;
}

bool Matcher::find(std::span<const Forced> forced, std::vector<int>* out) {
  if (pattern_.count == 0) {
    if (out) out->clear();
    return true;
  }
  std::fill(domains_.begin(), domains_.begin() + static_cast<std::ptrdiff_t>(pattern_.count * words_), 0);
  std::fill(assigned_.begin(), assigned_.begin() + pattern_.count, 0);
  if (!initialise(forced)) return false;
  if (!search(0)) return false;
  if (out) *out = result_;
  return true;
}

}  // namespace ordex::detail

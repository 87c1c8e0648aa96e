#include "ordex/bounds.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ordex/catalog.hpp"
#include "ordex/containment.hpp"
#include "ordex/graph_io.hpp"
#include "ordex/structure.hpp"

namespace ordex {

// ---------------------------------------------------------------------------
// Terms and bounds

std::string BoundTerm::to_string() const {
  std::ostringstream out;
  if (n_exp == Rational(0)) {
    out << "1";
  } else if (n_exp == Rational(1)) {
    out << "n";
  } else {
    out << "n^" << n_exp.numerator();
    if (n_exp.denominator() != 1) out << "/" << n_exp.denominator();
  }
  if (log_exp == 1) out << " log n";
  if (log_exp > 1) out << " log^" << log_exp << " n";
  if (subexp) out << " 2^O(sqrt(log n loglog n))";
  return out.str();
}

int compare_growth(const BoundTerm& a, const BoundTerm& b) {
  if (a.n_exp != b.n_exp) return a.n_exp < b.n_exp ? -1 : 1;
  if (a.subexp != b.subexp) return a.subexp ? 1 : -1;
  if (a.log_exp != b.log_exp) return a.log_exp < b.log_exp ? -1 : 1;
  return 0;
}

bool covers(const BoundTerm& a, const BoundTerm& b) {
  return a.n_exp >= b.n_exp && a.log_exp >= b.log_exp && (a.subexp || !b.subexp);
}

namespace {

bool term_less(const BoundTerm& a, const BoundTerm& b) {
  if (a.n_exp != b.n_exp) return a.n_exp < b.n_exp;
  if (a.log_exp != b.log_exp) return a.log_exp < b.log_exp;
  return a.subexp < b.subexp;
}

}  // namespace

AsymptoticBound::AsymptoticBound(Direction direction, std::vector<BoundTerm> terms)
    : direction_(direction) {
  if (terms.empty()) throw InputError("a bound needs at least one term");
  for (const auto& t : terms)
    if (t.n_exp < Rational(0) || t.log_exp < 0) throw InputError("bound exponents must be nonnegative");
  std::sort(terms.begin(), terms.end(), term_less);
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < terms.size() && !dominated; ++j)
      dominated = j != i && covers(terms[j], terms[i]);
    if (!dominated) terms_.push_back(terms[i]);
  }
}

const BoundTerm& AsymptoticBound::dominant() const {
  const BoundTerm* best = &terms_.front();
  for (const auto& t : terms_)
    if (compare_growth(t, *best) > 0) best = &t;
  return *best;
}

AsymptoticBound AsymptoticBound::merged(const AsymptoticBound& other) const {
  auto all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return AsymptoticBound(direction_, std::move(all));
}

AsymptoticBound AsymptoticBound::plus(const BoundTerm& term) const {
  auto all = terms_;
  all.push_back(term);
  return AsymptoticBound(direction_, std::move(all));
}

AsymptoticBound AsymptoticBound::times_log(int power) const {
  auto all = terms_;
  for (auto& t : all) t.log_exp += power;
  return AsymptoticBound(direction_, std::move(all));
}

std::string AsymptoticBound::to_string() const {
  std::string out = direction_ == Direction::Upper ? "O(" : "Omega(";
  if (terms_.size() > 1) out += "max(";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ", ";
    out += terms_[i].to_string();
  }
  if (terms_.size() > 1) out += ")";
  return out + ")";
}

AsymptoticBound lift_bipartite_to_ordered(const AsymptoticBound& bipartite) {
  auto terms = bipartite.terms();
  for (auto& t : terms)
    if (t.n_exp <= Rational(1) || t.subexp) t.log_exp += 1;
  return AsymptoticBound(Direction::Upper, std::move(terms));
}

std::string Classification::name() const {
  switch (kind) {
    case PatternClass::Quadratic:
      return "quadratic";
    case PatternClass::Sailboat:
      return "sailboat";
    default:
      return "bipartite";
  }
}

namespace {

const BoundTerm kLinear{Rational(1), 0, false};
const BoundTerm kQuadratic{Rational(2), 0, false};

bool is_sailboat_variant(const PatternGraph& bipartite) {
  if (bipartite.edge_count() != 6) return false;
  return canonical_variant(bipartite).graph == canonical_variant(sailboat()).graph;
}

std::optional<BipartiteSymmetry> parse_symmetry(const std::string& name) {
  for (const auto& s : BipartiteSymmetry::all())
    if (s.name() == name) return s;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reverse rules. Each takes a bipartite pattern (already moved to the chosen
// variant) and the rule parameters, checks the rule's hypothesis and returns
// the smaller pattern(s).

// (e) isolated vertices.
std::optional<PatternGraph> rule_e(const PatternGraph& p) {
  auto r = remove_isolated_vertices(p);
  if (r.removed_u + r.removed_v == 0) return std::nullopt;
  return r.graph;
}

// (b) the last row has one edge, to a column that is also a neighbour of the
// row before it.
std::optional<PatternGraph> rule_b(const PatternGraph& p) {
  const int m = p.nU();
  if (m < 2 || p.row_degree(m) != 1) return std::nullopt;
  int v = p.row_neighbors(m)[0];
  if (!p.has_edge(m - 1, v)) return std::nullopt;
  return delete_vertices(p, {m}, false);
}

// (c) column j has one edge, to u, and columns j-1 and j+1 are both adjacent to u.
std::optional<PatternGraph> rule_c(const PatternGraph& p, int j) {
  if (j <= 1 || j >= p.nV() || p.col_degree(j) != 1) return std::nullopt;
  int u = p.col_neighbors(j)[0];
  if (!p.has_edge(u, j - 1) || !p.has_edge(u, j + 1)) return std::nullopt;
  return delete_vertices(p, {j}, true);
}

// (f) columns j-1, j, j+1 with edges u0 v_j, u0 v_{j+1}, u1 v_{j-1}, u1 v_{j+1},
// u0 v_j the only edge at v_j.
std::optional<PatternGraph> rule_f(const PatternGraph& p, int j) {
  if (j <= 1 || j >= p.nV() || p.col_degree(j) != 1) return std::nullopt;
  int u0 = p.col_neighbors(j)[0];
  if (!p.has_edge(u0, j + 1)) return std::nullopt;
  bool found = false;
  for (int u1 : p.col_neighbors(j - 1))
    if (u1 != u0 && p.has_edge(u1, j + 1)) found = true;
  if (!found) return std::nullopt;
  return delete_vertices(p, {j}, true);
}

// (g) columns j..j+3 with edges u0 v_j, u0 v_{j+1}, u1 v_{j+2}, u1 v_{j+3} and
// v_{j+1}, v_{j+2} of degree one.
std::optional<PatternGraph> rule_g(const PatternGraph& p, int j) {
  if (j < 1 || j + 3 > p.nV()) return std::nullopt;
  if (p.col_degree(j + 1) != 1 || p.col_degree(j + 2) != 1) return std::nullopt;
  int u0 = p.col_neighbors(j + 1)[0];
  int u1 = p.col_neighbors(j + 2)[0];
  if (u0 == u1 || !p.has_edge(u0, j) || !p.has_edge(u1, j + 3)) return std::nullopt;
  return delete_vertices(p, {j + 1, j + 2}, true);
}

// (d) split at (x, y): every edge lies in [1,x]x[1,y] or [x,s]x[y,t], and
// u_x v_y is an edge. Both halves must be proper.
std::optional<std::pair<PatternGraph, PatternGraph>> rule_d(const PatternGraph& p, int x, int y) {
  const int s = p.nU();
  const int t = p.nV();
  if (x < 1 || x > s || y < 1 || y > t || !p.has_edge(x, y)) return std::nullopt;
  if ((x == s && y == t) || (x == 1 && y == 1)) return std::nullopt;
  for (const auto& e : p.edges()) {
    bool lower = e.first <= x && e.second <= y;
    bool upper = e.first >= x && e.second >= y;
    if (!lower && !upper) return std::nullopt;
  }
  return std::make_pair(induced_block(p, 1, x, 1, y), induced_block(p, x, s, y, t));
}

// Base: contained in the m-tuple bipartite matching with permutation pi.
bool in_matching(const PatternGraph& p, int m, const Permutation& pi) {
  return contains(generalized_matching(m, pi, Flavor::Bipartite), p).has_value();
}

struct Option {
  AsymptoticBound bound{Direction::Upper, {kQuadratic}};
  std::vector<DerivationStep> steps;
  std::vector<std::string> terminals;
  bool uses_c = false;
  int order = 0;
};

bool better(const Option& a, const Option& b) {
  int c = compare_growth(a.bound.dominant(), b.bound.dominant());
  if (c != 0) return c < 0;
  const auto& ta = a.bound.terms();
  const auto& tb = b.bound.terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    int d = compare_growth(ta[i], tb[i]);
    if (d != 0) return d < 0;
  }
  if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
  return a.order < b.order;
}

struct Variant {
  PatternGraph graph;
  BipartiteSymmetry symmetry;
};

std::vector<Variant> variants_of(const PatternGraph& p) {
  std::vector<Variant> out;
  std::set<PatternGraph> seen;
  for (const auto& s : BipartiteSymmetry::all()) {
    PatternGraph g = apply(s, p);
    if (seen.insert(g).second) out.push_back({std::move(g), s});
  }
  return out;
}

class UpperSearch {
 public:
  std::optional<Option> solve(const PatternGraph& canon, int depth) {
    auto key = std::make_pair(compact_form(canon), depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto result = compute(canon, depth);
    memo_.emplace(key, result);
    return result;
  }

 private:
  static PatternGraph canon(const PatternGraph& g) { return canonical_variant(g).graph; }

  std::optional<Option> base_case(const PatternGraph& p, const std::string& from) {
    std::optional<Option> best;
    auto variants = variants_of(p);
    for (const auto& v : variants) {
      const PatternGraph& g = v.graph;
      bool single_degree = true;
      for (int c = 1; c <= g.nV(); ++c) single_degree &= g.col_degree(c) <= 1;
      if (!single_degree || g.nU() == 0) continue;
      int m = 1;
      for (int r = 1; r <= g.nU(); ++r) m = std::max(m, g.row_degree(r));
      for (const auto& pi : Permutation::all(g.nU())) {
        if (!in_matching(g, m, pi)) continue;
        Option o;
        o.bound = AsymptoticBound(Direction::Upper, {kLinear});
        std::vector<int> params = {m};
        params.insert(params.end(), pi.values().begin(), pi.values().end());
        o.steps.push_back({"base.matching", v.symmetry.name(), from,
                           compact_form(generalized_matching(m, pi, Flavor::Bipartite)), params,
                           "n"});
        o.terminals.push_back("matching");
        return o;
      }
    }
    for (const auto& v : variants) {
      if (!contains(sailboat(), v.graph)) continue;
      Option o;
      o.bound = AsymptoticBound(Direction::Upper, {{Rational(1), 0, true}});
      o.steps.push_back({"base.sailboat", v.symmetry.name(), from, compact_form(sailboat()), {},
                         "n 2^O(sqrt(log n loglog n))"});
      o.terminals.push_back("sailboat");
      best = o;
      break;
    }
    return best;
  }

  // Single-child rule: wrap the child's option.
  void consider_unary(std::optional<Option>& best, const std::string& rule, const Variant& v,
                      const std::string& from, std::vector<int> params,
                      const PatternGraph& child, int depth, int order) {
    PatternGraph c = canon(child);
    auto sub = solve(c, depth - 1);
    if (!sub) return;
    Option o;
    std::string transform;
    if (rule == "b" || rule == "e") {
      o.bound = sub->bound.plus(kLinear);
      transform = "+ n";
    } else if (rule == "c") {
      o.bound = sub->bound;
      transform = "x 2";
    } else if (rule == "f") {
      o.bound = sub->bound.times_log(1);
      transform = "x log n";
    } else {
      o.bound = sub->bound.times_log(2);
      transform = "x log^2 n";
    }
    o.steps.push_back({rule, v.symmetry.name(), from, compact_form(c), std::move(params), transform});
    o.steps.insert(o.steps.end(), sub->steps.begin(), sub->steps.end());
    o.terminals = sub->terminals;
    o.uses_c = sub->uses_c || rule == "c";
    o.order = order;
    if (!best || better(o, *best)) best = std::move(o);
  }

  std::optional<Option> compute(const PatternGraph& p, int depth) {
    const std::string from = compact_form(p);
    std::optional<Option> best = base_case(p, from);
    if (best && best->bound.dominant() == kLinear) return best;
    if (depth <= 0) return best;

    const auto variants = variants_of(p);
    int order = 1;
    // (e) then (b): additive n.
    if (auto c = rule_e(p)) consider_unary(best, "e", variants.front(), from, {}, *c, depth, order);
    ++order;
    for (const auto& v : variants)
      if (auto c = rule_b(v.graph)) consider_unary(best, "b", v, from, {}, *c, depth, order);
    ++order;
    for (const auto& v : variants)
      for (int j = 2; j < v.graph.nV(); ++j)
        if (auto c = rule_c(v.graph, j)) consider_unary(best, "c", v, from, {j}, *c, depth, order);
    ++order;
    for (const auto& v : variants)
      for (int j = 2; j < v.graph.nV(); ++j)
        if (auto c = rule_f(v.graph, j)) consider_unary(best, "f", v, from, {j}, *c, depth, order);
    ++order;
    for (const auto& v : variants)
      for (int j = 1; j + 3 <= v.graph.nV(); ++j)
        if (auto c = rule_g(v.graph, j)) consider_unary(best, "g", v, from, {j}, *c, depth, order);
    ++order;
    for (const auto& v : variants) {
      for (const auto& e : v.graph.edges()) {
        auto halves = rule_d(v.graph, e.first, e.second);
        if (!halves) continue;
        PatternGraph left = canon(halves->first);
        PatternGraph right = canon(halves->second);
        auto a = solve(left, depth - 1);
        if (!a) continue;
        auto b = solve(right, depth - 1);
        if (!b) continue;
        Option o;
        o.bound = a->bound.merged(b->bound);
        std::vector<int> params = {e.first, e.second};
        o.steps.push_back({"d.left", v.symmetry.name(), from, compact_form(left), params, "max"});
        o.steps.insert(o.steps.end(), a->steps.begin(), a->steps.end());
        o.steps.push_back({"d.right", v.symmetry.name(), from, compact_form(right), params, "max"});
        o.steps.insert(o.steps.end(), b->steps.begin(), b->steps.end());
        o.terminals = a->terminals;
        o.terminals.insert(o.terminals.end(), b->terminals.begin(), b->terminals.end());
        o.uses_c = a->uses_c || b->uses_c;
        o.order = order;
        if (!best || better(o, *best)) best = std::move(o);
      }
    }
    return best;
  }

  std::map<std::pair<std::string, int>, std::optional<Option>> memo_;
};

std::string join_terminals(const std::vector<std::string>& terminals) {
  std::vector<std::string> distinct;
  for (const auto& t : terminals)
    if (std::find(distinct.begin(), distinct.end(), t) == distinct.end()) distinct.push_back(t);
  std::string out;
  for (const auto& t : distinct) out += (out.empty() ? "" : "+") + t;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Classification classify_pattern(const PatternGraph& pattern) {
  if (pattern.empty()) throw InputError("pattern must have at least one edge");
  Classification c;
  switch (pattern.flavor()) {
    case Flavor::Bipartite:
      c.chi = 2;
      c.kind = is_sailboat_variant(pattern) ? PatternClass::Sailboat : PatternClass::Bipartite;
      return c;
    case Flavor::Cyclic:
      c.chi = circular_chromatic_number(pattern);
      c.kind = c.chi >= 3 ? PatternClass::Quadratic : PatternClass::Bipartite;
      return c;
    default:
      c.chi = interval_chromatic_number(pattern);
      if (c.chi >= 3) {
        c.kind = PatternClass::Quadratic;
        c.density = (Rational(1) - Rational(1, c.chi - 1)) / 2;
      } else {
        c.kind = is_sailboat_variant(split_into_parts(pattern)) ? PatternClass::Sailboat
                                                                 : PatternClass::Bipartite;
      }
      return c;
  }
}

BoundResult derive_upper_bound(const PatternGraph& bipartite, int depth) {
  if (!bipartite.is_bipartite()) throw InputError("the upper-bound rules act on bipartite patterns");
  if (bipartite.empty()) throw InputError("pattern must have at least one edge");
  if (depth < 0) throw InputError("depth must be nonnegative");
  PatternGraph start = canonical_variant(bipartite).graph;
  UpperSearch search;
  auto best = search.solve(start, depth);
  Derivation d;
  d.pattern = compact_form(start);
  if (!best) {
    d.no_derivation = true;
    d.terminal = "none";
    return {AsymptoticBound(Direction::Upper, {kQuadratic}), std::move(d)};
  }
  d.steps = std::move(best->steps);
  d.terminal = join_terminals(best->terminals);
  d.uses_rule_c = best->uses_c;
  return {best->bound, std::move(d)};
}

BoundResult derive_ordered_upper_bound(const PatternGraph& ordered, int depth) {
  if (ordered.flavor() != Flavor::Ordered) throw InputError("expected an ordered pattern");
  if (ordered.empty()) throw InputError("pattern must have at least one edge");
  const std::string from = compact_form(ordered);
  int chi = interval_chromatic_number(ordered);
  if (chi >= 3) {
    Derivation d;
    d.pattern = from;
    d.steps.push_back({"quadratic", "identity", from, from, {chi}, "n^2"});
    d.terminal = "quadratic";
    return {AsymptoticBound(Direction::Upper, {kQuadratic}), std::move(d)};
  }
  PatternGraph parts = split_into_parts(ordered);
  auto inner = derive_upper_bound(parts, depth);
  Derivation d;
  d.pattern = from;
  d.no_derivation = inner.derivation.no_derivation;
  d.terminal = inner.derivation.terminal;
  d.uses_rule_c = inner.derivation.uses_rule_c;
  if (d.no_derivation) return {AsymptoticBound(Direction::Upper, {kQuadratic}), std::move(d)};
  d.steps.push_back({"lift", "identity", from, inner.derivation.pattern, {}, "x log n unless n_exp > 1"});
  d.steps.insert(d.steps.end(), inner.derivation.steps.begin(), inner.derivation.steps.end());
  return {lift_bipartite_to_ordered(inner.bound), std::move(d)};
}

BoundResult derive_lower_bound(const PatternGraph& pattern, int h_cap) {
  if (pattern.empty()) throw InputError("pattern must have at least one edge");
  const std::string from = compact_form(pattern);
  std::vector<BoundTerm> terms = {{Rational(0), 0, false}};
  Derivation d;
  d.pattern = from;
  std::vector<std::pair<BoundTerm, std::string>> sources;

  if (auto k = underlying_shortest_cycle(pattern)) {
    BoundTerm t{Rational(*k, *k - 1), 0, false};
    terms.push_back(t);
    sources.emplace_back(t, "cycle");
    d.steps.push_back({"lower.cycle", "identity", from, "C" + std::to_string(*k), {*k},
                       t.to_string()});
  }

  const BoundTerm n_log{Rational(1), 1, false};
  if (pattern.is_bipartite()) {
    bool found = false;
    for (int j = 1; j <= h_cap && !found; ++j) {
      for (const auto& v : variants_of(keszegh_h(j))) {
        if (!contains(pattern, v.graph)) continue;
        d.steps.push_back({"lower.H", v.symmetry.name(), from, compact_form(keszegh_h(j)), {j},
                           n_log.to_string()});
        found = true;
        break;
      }
    }
    if (found) {
      terms.push_back(n_log);
      sources.emplace_back(n_log, "H");
    }
  } else if (pattern.flavor() == Flavor::Ordered) {
    if (contains(pattern, nested_crossing_pattern())) {
      terms.push_back(n_log);
      sources.emplace_back(n_log, "nested");
      d.steps.push_back({"lower.nested", "identity", from, compact_form(nested_crossing_pattern()),
                         {}, n_log.to_string()});
    } else {
      for (int j = 1; j <= h_cap; ++j) {
        if (!contains(pattern, concatenate_parts(keszegh_h(j)))) continue;
        terms.push_back(n_log);
        sources.emplace_back(n_log, "H");
        d.steps.push_back({"lower.H", "identity", from, compact_form(concatenate_parts(keszegh_h(j))),
                           {j}, n_log.to_string()});
        break;
      }
    }
    int chi = interval_chromatic_number(pattern);
    if (chi >= 3) {
      terms.push_back(kQuadratic);
      sources.emplace_back(kQuadratic, "quadratic");
      d.steps.push_back({"lower.quadratic", "identity", from, from, {chi}, "n^2"});
    }
  }

  AsymptoticBound bound(Direction::Lower, std::move(terms));
  d.terminal = "floor";
  for (const auto& [t, name] : sources)
    if (t == bound.dominant()) d.terminal = name;
  return {std::move(bound), std::move(d)};
}

// ---------------------------------------------------------------------------
// Replay

namespace {

bool fail(std::string* error, std::size_t index, const std::string& why) {
  if (error) *error = "step " + std::to_string(index + 1) + ": " + why;
  return false;
}

}  // namespace

bool replay_derivation(const Derivation& derivation, std::string* error) {
  std::set<std::string> reached = {derivation.pattern};
  for (std::size_t i = 0; i < derivation.steps.size(); ++i) {
    const auto& s = derivation.steps[i];
    if (!reached.count(s.from)) return fail(error, i, "input pattern was never produced");
    PatternGraph from;
    try {
      from = parse_compact(s.from);
    } catch (const InputError& e) {
      return fail(error, i, std::string("unreadable input pattern: ") + e.what());
    }

    if (s.rule == "quadratic") {
      if (from.flavor() != Flavor::Ordered || interval_chromatic_number(from) < 3)
        return fail(error, i, "pattern is not of interval chromatic number >= 3");
      continue;
    }
    if (s.rule == "lift") {
      if (from.flavor() != Flavor::Ordered) return fail(error, i, "lift needs an ordered pattern");
      if (compact_form(canonical_variant(split_into_parts(from)).graph) != s.to)
        return fail(error, i, "split does not reproduce the recorded pattern");
      reached.insert(s.to);
      continue;
    }
    if (s.rule.rfind("lower.", 0) == 0) {
      if (s.rule == "lower.cycle") {
        auto k = underlying_shortest_cycle(from);
        if (!k || s.params.empty() || *k != s.params[0]) return fail(error, i, "girth mismatch");
        continue;
      }
      if (s.rule == "lower.quadratic") {
        if (interval_chromatic_number(from) < 3) return fail(error, i, "chromatic number below 3");
        continue;
      }
      PatternGraph witness = parse_compact(s.to);
      if (from.is_bipartite()) {
        auto sym = parse_symmetry(s.variant);
        if (!sym) return fail(error, i, "unknown variant '" + s.variant + "'");
        witness = apply(*sym, witness);
      }
      if (!contains(from, witness)) return fail(error, i, "pattern does not contain the witness");
      continue;
    }

    auto sym = parse_symmetry(s.variant);
    if (!sym) return fail(error, i, "unknown variant '" + s.variant + "'");
    if (!from.is_bipartite()) return fail(error, i, "rule needs a bipartite pattern");
    PatternGraph v = apply(*sym, from);

    if (s.rule == "base.matching" || s.rule == "base.sailboat") {
      PatternGraph target = parse_compact(s.to);
      if (s.rule == "base.sailboat" && target != sailboat())
        return fail(error, i, "base pattern is not the sailboat");
      if (s.rule == "base.matching") {
        if (s.params.empty()) return fail(error, i, "missing matching parameters");
        std::vector<int> word(s.params.begin() + 1, s.params.end());
        PatternGraph expected = generalized_matching(s.params[0], Permutation(word), Flavor::Bipartite);
        if (expected != target) return fail(error, i, "recorded matching does not match its parameters");
      }
      if (!contains(target, v)) return fail(error, i, "pattern is not contained in the base pattern");
      continue;
    }

    std::optional<PatternGraph> out;
    auto param = [&](std::size_t k) { return k < s.params.size() ? s.params[k] : 0; };
    if (s.rule == "e") {
      out = rule_e(v);
    } else if (s.rule == "b") {
      out = rule_b(v);
    } else if (s.rule == "c") {
      out = rule_c(v, param(0));
    } else if (s.rule == "f") {
      out = rule_f(v, param(0));
    } else if (s.rule == "g") {
      out = rule_g(v, param(0));
    } else if (s.rule == "d.left" || s.rule == "d.right") {
      auto halves = rule_d(v, param(0), param(1));
      if (halves) out = s.rule == "d.left" ? halves->first : halves->second;
    } else {
      return fail(error, i, "unknown rule '" + s.rule + "'");
    }
    if (!out) return fail(error, i, "rule hypothesis does not hold");
    if (compact_form(canonical_variant(*out).graph) != s.to)
      return fail(error, i, "rule output differs from the recorded pattern");
    reached.insert(s.to);
  }
  return true;
}

}  // namespace ordex

#include "ordex/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordex/bounds.hpp"
#include "ordex/cache.hpp"
#include "ordex/catalog.hpp"
#include "ordex/config.hpp"
#include "ordex/constructions.hpp"
#include "ordex/containment.hpp"
#include "ordex/graph_io.hpp"
#include "ordex/solver.hpp"
#include "ordex/structure.hpp"

namespace ordex::cli {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json graph_json(const PatternGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"flavor", std::string(to_string(g.flavor()))},
          {"n_u", g.nU()},
          {"n_v", g.nV()},
          {"edges", edges},
          {"text", compact_form(g)}};
}

ordered_json embedding_json(const Embedding& e) {
  return {{"u_map", e.u_map}, {"v_map", e.v_map}};
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ordered_json terms_json(const AsymptoticBound& b) {
  ordered_json out = ordered_json::array();
  for (const auto& t : b.terms())
    out.push_back({{"n_exp", rational_text(t.n_exp)}, {"log_exp", t.log_exp}, {"subexp", t.subexp}});
  return out;
}

ordered_json bound_json(const BoundResult& r, bool trace) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.derivation.steps) {
    ordered_json step = {{"rule", s.rule}, {"from", s.from}, {"to", s.to}};
    if (trace) {
      step["variant"] = s.variant;
      step["params"] = s.params;
      step["transform"] = s.transform;
    }
    steps.push_back(step);
  }
  return {{"terms", terms_json(r.bound)},
          {"bound", r.bound.to_string()},
          {"dominant", r.bound.dominant().to_string()},
          {"derivation", steps},
          {"terminal", r.derivation.terminal},
          {"no_derivation", r.derivation.no_derivation},
          {"uses_rule_c", r.derivation.uses_rule_c}};
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Line-oriented rendering of a flat-ish JSON report.
void emit_text(std::ostream& out, const ordered_json& doc, const std::string& prefix = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      emit_text(out, value, prefix + key + ".");
    } else {
      out << prefix << key << ": " << scalar_text(value) << '\n';
    }
  }
}

void emit_report(std::ostream& out, const ordered_json& doc, const std::string& format) {
  if (format == "text")
    emit_text(out, doc);
  else
    out << doc.dump() << '\n';
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Options {
  std::string config_path;
  std::string format;

  std::string gen_name;
  std::string host_path;
  std::string pattern_path;
  std::string graph_path;
  bool witness = false;
  std::string family;
  int n = 0;
  std::optional<int> m;
  std::optional<std::uint64_t> seed;
  std::string verify_path;
  std::string output_path;
  std::string flavor;
  std::string cache_dir;
  std::string perm;
  int n_min = 1;
  int n_max = 1;
  std::string direction = "upper";
  bool trace = false;
  std::optional<int> depth;
};

std::optional<std::string> cache_dir_for(const Options& o, const RunConfig& config) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv("ORDEX_CACHE_DIR"); env && *env) return std::string(env);
  return config.cache_dir;
}

std::string format_for(const Options& o, const RunConfig& config, const std::string& fallback) {
  if (!o.format.empty()) return o.format;
  if (config.format) return *config.format;
  return fallback;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("bad " + what + " '" + text + "'");
}

int run_gen(const Options& o, const RunConfig& c, std::ostream& out) {
  PatternGraph g = generate(o.gen_name);
  std::string format = format_for(o, c, "text");
  if (format == "json")
    out << graph_json(g).dump() << '\n';
  else
    out << serialize_graph(g);
  return 0;
}

int run_contains(const Options& o, const RunConfig& c, std::ostream& out) {
  PatternGraph host = read_graph_file(o.host_path);
  PatternGraph pattern = read_graph_file(o.pattern_path);
  auto e = contains(host, pattern);
  ordered_json doc = {{"contains", e.has_value()}};
  if (o.witness) doc["witness"] = e ? embedding_json(*e) : ordered_json(nullptr);
  emit_report(out, doc, format_for(o, c, "json"));
  return 0;
}

int run_chromatic(const Options& o, const RunConfig& c, std::ostream& out) {
  PatternGraph g = read_graph_file(o.pattern_path);
  ordered_json doc = {{"flavor", std::string(to_string(g.flavor()))}};
  if (g.flavor() == Flavor::Cyclic) {
    doc["kind"] = "circular";
    doc["value"] = circular_chromatic_number(g);
  } else {
    doc["kind"] = "interval";
    doc["value"] = interval_chromatic_number(g.is_bipartite() ? concatenate_parts(g) : g);
  }
  emit_report(out, doc, format_for(o, c, "json"));
  return 0;
}

int run_construct(const Options& o, const RunConfig& c, std::ostream& out) {
  auto parts = split(o.family, ':');
  ordered_json doc = {{"family", o.family}, {"n", o.n}};
  PatternGraph g;
  if (parts.size() == 3 && parts[0] == "pow") {
    int base = parse_int(parts[1], "base");
    g = power_distance_graph(o.n, base, parse_flavor(parts[2]));
    doc["edge_count"] = g.edge_count();
    doc["formula_edge_count"] = power_distance_edge_count(o.n, base);
  } else if (parts.size() == 2 && parts[0] == "ckfree") {
    int k = parse_int(parts[1], "cycle length");
    std::uint64_t seed = o.seed.value_or(c.seed);
    auto r = random_ck_free(o.n, k, seed);
    g = r.graph;
    doc["edge_count"] = g.edge_count();
    doc["seed"] = seed;
    doc["probability"] = r.probability;
    doc["drawn_edges"] = r.drawn_edges;
    doc["target_edges"] = r.target_edges;
  } else {
    throw InputError("unknown family '" + o.family + "' (pow:<base>:<flavor> | ckfree:<k>)");
  }
  doc["avoids"] = nullptr;
  if (!o.verify_path.empty()) {
    auto report = verify_construction(g, read_graph_file(o.verify_path));
    doc["avoids"] = report.avoids;
    if (report.witness) doc["witness"] = embedding_json(*report.witness);
  }
  if (!o.output_path.empty()) {
    std::ofstream file(o.output_path);
    if (!file) throw InputError("cannot write '" + o.output_path + "'");
    file << serialize_graph(g);
  }
  emit_report(out, doc, format_for(o, c, "json"));
  return 0;
}

int run_verify(const Options& o, const RunConfig& c, std::ostream& out) {
  auto report = verify_construction(read_graph_file(o.graph_path), read_graph_file(o.pattern_path));
  ordered_json doc = {{"avoids", report.avoids},
                      {"witness", report.witness ? embedding_json(*report.witness) : ordered_json(nullptr)},
                      {"edge_count", report.edge_count},
                      {"density", report.density}};
  emit_report(out, doc, format_for(o, c, "json"));
  return 0;
}

int run_solve(const Options& o, const RunConfig& c, std::ostream& out) {
  PatternGraph pattern = read_graph_file(o.pattern_path);
  Flavor flavor = o.flavor.empty() ? pattern.flavor() : parse_flavor(o.flavor);
  std::optional<ResultCache> cache;
  if (auto dir = cache_dir_for(o, c)) cache.emplace(*dir);
  std::optional<int> m = o.m;
  if (flavor == Flavor::Bipartite && !m) m = o.n;
  auto rec = max_edges_avoiding(flavor, o.n, m, pattern, c.caps, cache ? &*cache : nullptr);
  ordered_json doc = {{"flavor", std::string(to_string(rec.flavor))},
                      {"pattern", compact_form(rec.pattern)},
                      {"n", rec.n}};
  doc["m"] = flavor == Flavor::Bipartite ? ordered_json(rec.m) : ordered_json(nullptr);
  doc["value"] = rec.value;
  if (o.witness) doc["witness"] = compact_form(rec.witness);
  emit_report(out, doc, format_for(o, c, "json"));
  return 0;
}

int run_count(const Options& o, const RunConfig& c, std::ostream& out) {
  PatternGraph pattern = read_graph_file(o.pattern_path);
  BigInt count = count_avoiders(o.n, pattern, c.caps);
  ordered_json doc = {{"pattern", compact_form(pattern)}, {"n", o.n}, {"count", count.str()}};
  emit_report(out, doc, format_for(o, c, "json"));
  return 0;
}

int run_count_perms(const Options& o, const RunConfig& c, std::ostream& out) {
  Permutation pi = Permutation::parse(o.perm);
  BigInt count = count_avoiding_permutations(o.n, pi, c.caps);
  ordered_json doc = {{"perm", pi.word()}, {"n", o.n}, {"count", count.str()}};
  emit_report(out, doc, format_for(o, c, "json"));
  return 0;
}

int run_table(const Options& o, const RunConfig& c, std::ostream& out) {
  PatternGraph pattern = read_graph_file(o.pattern_path);
  std::optional<ResultCache> cache;
  if (auto dir = cache_dir_for(o, c)) cache.emplace(*dir);
  auto rows = growth_table(pattern, o.n_min, o.n_max, c.caps, cache ? &*cache : nullptr);
  std::string format = format_for(o, c, "csv");
  if (format == "json") {
    ordered_json list = ordered_json::array();
    for (const auto& r : rows)
      list.push_back({{"n", r.n},
                      {"value", r.value},
                      {"value_per_n", r.per_n},
                      {"value_per_n_log_n",
                       r.per_n_log_n ? ordered_json(*r.per_n_log_n) : ordered_json(nullptr)}});
    ordered_json doc = {{"pattern", compact_form(pattern)},
                        {"flavor", std::string(to_string(pattern.flavor()))},
                        {"rows", list}};
    out << doc.dump() << '\n';
  } else {
    out << "n,value,value_per_n,value_per_n_log_n\n";
    for (const auto& r : rows)
      out << r.n << ',' << r.value << ',' << format_double(r.per_n) << ','
          << (r.per_n_log_n ? format_double(*r.per_n_log_n) : "") << '\n';
  }
  return 0;
}

int run_bound(const Options& o, const RunConfig& c, std::ostream& out) {
  PatternGraph pattern = read_graph_file(o.pattern_path);
  if (pattern.empty()) throw InputError("pattern must have at least one edge");
  const int depth = o.depth.value_or(c.depth);
  if (depth < 0) throw InputError("depth must be nonnegative");
  const bool upper = o.direction == "upper" || o.direction == "both";
  const bool lower = o.direction == "lower" || o.direction == "both";
  if (upper && pattern.flavor() == Flavor::Cyclic)
    throw RefusedError("the upper-bound engine handles ordered and bipartite patterns only");

  auto cls = classify_pattern(pattern);
  ordered_json doc = {{"pattern", compact_form(pattern)}, {"direction", o.direction}};
  doc["classification"] = {{"kind", cls.name()},
                           {"chi", cls.chi},
                           {"density", cls.density ? ordered_json(rational_text(*cls.density))
                                                   : ordered_json(nullptr)}};
  std::optional<BoundResult> up;
  std::optional<BoundResult> low;
  if (upper)
    up = pattern.is_bipartite() ? derive_upper_bound(pattern, depth)
                                : derive_ordered_upper_bound(pattern, depth);
  if (lower) low = derive_lower_bound(pattern, c.h_cap);

  if (o.direction == "both") {
    doc["upper"] = bound_json(*up, o.trace);
    doc["lower"] = bound_json(*low, o.trace);
  } else {
    ordered_json single = bound_json(up ? *up : *low, o.trace);
    for (auto& [k, v] : single.items()) doc[k] = v;
  }
  emit_report(out, doc, format_for(o, c, "json"));
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal functions of ordered graphs and 0-1 matrices", "ordex"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "JSON run configuration");
  app.add_option("--format", o.format, "Output format: json | text (csv for table)")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  auto* gen = app.add_subcommand("gen", "Print a named pattern in graph text format");
  gen->add_option("name", o.gen_name, "sailboat | H:<k> | match:<m>:<perm>:<flavor> | turan:<n>:<r>")
      ->required();

  auto* cont = app.add_subcommand("contains", "Test whether a host contains a pattern");
  cont->add_option("--host", o.host_path, "Host graph file")->required();
  cont->add_option("--pattern", o.pattern_path, "Pattern graph file")->required();
  cont->add_flag("--witness", o.witness, "Include the embedding");

  auto* chrom = app.add_subcommand("chromatic", "Interval (or circular) chromatic number");
  chrom->add_option("--pattern", o.pattern_path, "Graph file")->required();

  auto* cons = app.add_subcommand("construct", "Build a lower-bound construction");
  cons->add_option("--family", o.family, "pow:<base>:<ordered|bipartite> | ckfree:<k>")->required();
  cons->add_option("--n", o.n, "Vertex count (per part for bipartite)")->required();
  cons->add_option("--seed", o.seed, "Seed for randomized families");
  cons->add_option("--verify", o.verify_path, "Pattern file the construction should avoid");
  cons->add_option("--output", o.output_path, "Write the graph to this file");

  auto* ver = app.add_subcommand("verify", "Check that a graph avoids a pattern");
  ver->add_option("--graph", o.graph_path, "Graph file")->required();
  ver->add_option("--pattern", o.pattern_path, "Pattern file")->required();

  auto* solve = app.add_subcommand("solve", "Exact extremal number with a witness");
  solve->add_option("--pattern", o.pattern_path, "Pattern file")->required();
  solve->add_option("--flavor", o.flavor, "ordered | bipartite | cyclic (default: the pattern's)");
  solve->add_option("--n", o.n, "Host vertices (rows for bipartite)")->required();
  solve->add_option("--m", o.m, "Host columns (bipartite only, default n)");
  solve->add_flag("--witness", o.witness, "Include an extremal host");
  solve->add_option("--cache", o.cache_dir, "Result cache directory");

  auto* count = app.add_subcommand("count", "Count n x n matrices avoiding a bipartite pattern");
  count->add_option("--pattern", o.pattern_path, "Bipartite pattern file")->required();
  count->add_option("--n", o.n, "Matrix size")->required();

  auto* perms = app.add_subcommand("count-perms", "Count n-permutations avoiding a permutation");
  perms->add_option("--perm", o.perm, "Pattern permutation, e.g. 132")->required();
  perms->add_option("--n", o.n, "Permutation length")->required();

  auto* table = app.add_subcommand("table", "Exact values over a range of n");
  table->add_option("--pattern", o.pattern_path, "Pattern file")->required();
  table->add_option("--n-min", o.n_min, "First n")->required();
  table->add_option("--n-max", o.n_max, "Last n")->required();
  table->add_option("--cache", o.cache_dir, "Result cache directory");

  auto* bound = app.add_subcommand("bound", "Derive asymptotic bounds with a rule trace");
  bound->add_option("--pattern", o.pattern_path, "Ordered or bipartite pattern file")->required();
  bound->add_option("--direction", o.direction, "upper | lower | both")
      ->check(CLI::IsMember({"upper", "lower", "both"}));
  bound->add_flag("--trace", o.trace, "Include rule variants, parameters and transforms");
  bound->add_option("--depth", o.depth, "Rule depth cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ordex: " << e.what() << '\n';
    return 2;
  }

  try {
    RunConfig config;
    if (!o.config_path.empty()) config = load_config(o.config_path);
    if (gen->parsed()) return run_gen(o, config, out);
    if (cont->parsed()) return run_contains(o, config, out);
    if (chrom->parsed()) return run_chromatic(o, config, out);
    if (cons->parsed()) return run_construct(o, config, out);
    if (ver->parsed()) return run_verify(o, config, out);
    if (solve->parsed()) return run_solve(o, config, out);
    if (count->parsed()) return run_count(o, config, out);
    if (perms->parsed()) return run_count_perms(o, config, out);
    if (table->parsed()) return run_table(o, config, out);
    if (bound->parsed()) return run_bound(o, config, out);
  } catch (const RefusedError& e) {
    out << ordered_json{{"error", "refused"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "ordex: " << e.what() << '\n';
    return 2;
  }
  err << "ordex: no subcommand\n";
  return 2;
}

}  // namespace ordex::cli

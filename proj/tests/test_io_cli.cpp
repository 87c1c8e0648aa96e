#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "ordex/catalog.hpp"
#include "ordex/cli.hpp"
#include "ordex/config.hpp"
#include "ordex/graph_io.hpp"

using namespace ordex;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("ordex_cli_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_SUITE("io_cli") {

TEST_CASE("parse examples") {
  auto a = parse_graph("bipartite 2 2\n1 1\n2 2");
  CHECK(a == permutation_matching(Permutation::parse("12")));
  CHECK(parse_graph("matrix 2 2\n10\n01") == a);
  CHECK(parse_graph("# comment\n\nordered 3\n1 2 # tail\n") == PatternGraph::ordered(3, {{1, 2}}));
  try {
    parse_graph("ordered 3\n1 4");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("vertex index 4 out of range") != std::string::npos);
  }
}

TEST_CASE("distinct diagnostics") {
  auto message = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("tree 3").find("malformed header") != std::string::npos);
  CHECK(message("ordered 3\n2 2").find("loop") != std::string::npos);
  CHECK(message("ordered 3\n1 2\n2 1").find("duplicate edge") != std::string::npos);
  CHECK(message("bipartite 2 2\n3 1").find("out of range") != std::string::npos);
  CHECK(message("matrix 2 2\n10").find("line") != std::string::npos);
}

TEST_CASE("serialize round trip") {
  std::mt19937_64 rng(31);
  for (Flavor f : {Flavor::Ordered, Flavor::Bipartite, Flavor::Cyclic}) {
    for (int t = 0; t < 40; ++t) {
      auto g = oracle::random_graph(f, 1 + t % 7, f == Flavor::Bipartite ? 1 + t % 5 : 0, 0.4, rng);
      CHECK(parse_graph(serialize_graph(g)) == g);
      CHECK(parse_compact(compact_form(g)) == g);
      CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
    }
  }
  CHECK(compact_form(permutation_matching(Permutation::parse("12"))) == "bipartite 2 2; 1 1; 2 2");
}

TEST_CASE("config") {
  auto c = parse_config(R"({"caps": {"bipartite": 5}, "depth": 4, "seed": 9})");
  CHECK(c.caps.bipartite == 5);
  CHECK(c.caps.ordered == 12);
  CHECK(c.depth == 4);
  CHECK(c.seed == 9);
  CHECK_THROWS_AS(parse_config(R"({"colour": 1})"), InputError);
  CHECK_THROWS_AS(parse_config(R"({"caps": {"tree": 1}})"), InputError);
  CHECK_THROWS_AS(parse_config(R"({"caps": {"ordered": 0}})"), InputError);
  CHECK_THROWS_AS(parse_config(R"({"format": "xml"})"), InputError);
  CHECK_THROWS_AS(parse_config("[1,2]"), InputError);
}

TEST_CASE("gen and contains") {
  auto g = run({"gen", "sailboat"});
  CHECK(g.status == 0);
  CHECK(parse_graph(g.out) == sailboat());
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 7);

  TempDir dir("contains");
  auto p = dir.write("p.g", serialize_graph(sailboat()));
  auto c = run({"contains", "--host", p, "--pattern", p, "--witness"});
  CHECK(c.status == 0);
  auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["contains"] == true);
  CHECK(doc["witness"]["u_map"] == nlohmann::json({1, 2, 3}));
  CHECK(doc["witness"]["v_map"] == nlohmann::json({1, 2, 3, 4}));
}

TEST_CASE("exit codes") {
  TempDir dir("exit");
  auto c4 = dir.write("c4.g", "bipartite 2 2\n1 1\n1 2\n2 1\n2 2\n");
  auto refused = run({"solve", "--flavor", "bipartite", "--n", "9", "--m", "9", "--pattern", c4});
  CHECK(refused.status == 1);
  auto doc = nlohmann::json::parse(refused.out);
  CHECK(doc["error"] == "refused");
  CHECK(doc["message"].get<std::string>().find("size cap exceeded") != std::string::npos);

  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"solve", "--pattern", c4}).status == 2);
  auto bad = dir.write("bad.g", "ordered 3\n1 4\n");
  auto parse = run({"verify", "--graph", bad, "--pattern", c4});
  CHECK(parse.status == 2);
  CHECK(parse.err.find("line 2, column 3") != std::string::npos);
  CHECK(run({"solve", "--pattern", dir.path.string() + "/missing.g", "--n", "3"}).status == 2);
}

TEST_CASE("solve, cache and table") {
  TempDir dir("solve");
  auto c4 = dir.write("c4.g", "bipartite 2 2\n1 1\n1 2\n2 1\n2 2\n");
  auto cache = (dir.path / "cache").string();
  auto first = run({"solve", "--pattern", c4, "--n", "4", "--witness", "--cache", cache});
  REQUIRE(first.status == 0);
  auto second = run({"solve", "--pattern", c4, "--n", "4", "--witness", "--cache", cache});
  CHECK(second.out == first.out);
  CHECK(nlohmann::json::parse(first.out)["value"] == 9);

  auto table = run({"table", "--pattern", c4, "--n-min", "1", "--n-max", "3"});
  CHECK(table.status == 0);
  CHECK(table.out.rfind("n,value,value_per_n,value_per_n_log_n\n", 0) == 0);

  auto cfg = dir.write("cfg.json", R"({"caps": {"bipartite": 3}})");
  CHECK(run({"--config", cfg, "solve", "--pattern", c4, "--n", "4"}).status == 1);
  auto bad_cfg = dir.write("bad.json", R"({"cap": {}})");
  CHECK(run({"--config", bad_cfg, "solve", "--pattern", c4, "--n", "2"}).status == 2);
}

TEST_CASE("count, bound and construct") {
  auto perms = run({"count-perms", "--perm", "132", "--n", "8"});
  CHECK(perms.status == 0);
  CHECK(nlohmann::json::parse(perms.out)["count"] == "1430");

  TempDir dir("bound");
  auto h1 = dir.write("h1.g", serialize_graph(keszegh_h(1)));
  auto lower = run({"bound", "--pattern", h1, "--direction", "lower"});
  CHECK(lower.status == 0);
  CHECK(nlohmann::json::parse(lower.out)["bound"] == "Omega(n log n)");
  auto sb = dir.write("s.g", serialize_graph(sailboat()));
  auto upper = run({"bound", "--pattern", sb, "--trace"});
  CHECK(upper.status == 0);
  auto doc = nlohmann::json::parse(upper.out);
  CHECK(doc["terminal"] == "sailboat");
  CHECK(doc["classification"]["kind"] == "sailboat");

  auto nested = dir.write("nested.g", serialize_graph(nested_crossing_pattern()));
  auto pow2 = run({"construct", "--family", "pow:2:ordered", "--n", "64", "--verify", nested,
                   "--format", "json"});
  CHECK(pow2.status == 0);
  auto payload = nlohmann::json::parse(pow2.out);
  CHECK(payload["edge_count"] == 321);
  CHECK(payload["avoids"] == true);
  auto a = run({"construct", "--family", "ckfree:4", "--n", "30", "--seed", "4"});
  auto b = run({"construct", "--family", "ckfree:4", "--n", "30", "--seed", "4"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

}  // TEST_SUITE

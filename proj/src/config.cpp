#include "ordex/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ordex {

namespace {

using nlohmann::json;

void reject_unknown(const json& object, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : object.items())
    if (!known.count(key)) throw InputError("unknown config key '" + where + key + "'");
}

int read_int(const json& object, const char* key, int fallback) {
  if (!object.contains(key)) return fallback;
  const auto& v = object.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("config key '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("config must be a JSON object");
  reject_unknown(doc, {"caps", "depth", "h_cap", "cache_dir", "format", "seed"}, "");

  RunConfig config;
  if (doc.contains("caps")) {
    const auto& caps = doc.at("caps");
    if (!caps.is_object()) throw InputError("config key 'caps' must be an object");
    reject_unknown(caps, {"ordered", "bipartite", "cyclic", "count_avoiders", "count_perms"},
                   "caps.");
    config.caps.ordered = read_int(caps, "ordered", config.caps.ordered);
    config.caps.bipartite = read_int(caps, "bipartite", config.caps.bipartite);
    config.caps.cyclic = read_int(caps, "cyclic", config.caps.cyclic);
    config.caps.count_avoiders = read_int(caps, "count_avoiders", config.caps.count_avoiders);
    config.caps.count_perms = read_int(caps, "count_perms", config.caps.count_perms);
  }
  config.depth = read_int(doc, "depth", config.depth);
  config.h_cap = read_int(doc, "h_cap", config.h_cap);
  if (doc.contains("cache_dir")) {
    if (!doc.at("cache_dir").is_string()) throw InputError("config key 'cache_dir' must be a string");
    config.cache_dir = doc.at("cache_dir").get<std::string>();
  }
  if (doc.contains("format")) {
    if (!doc.at("format").is_string()) throw InputError("config key 'format' must be a string");
    config.format = doc.at("format").get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw InputError("config key 'seed' must be a nonnegative integer");
    config.seed = doc.at("seed").get<std::uint64_t>();
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void validate(const RunConfig& config) {
  const auto& c = config.caps;
  if (c.ordered < 1 || c.bipartite < 1 || c.cyclic < 1 || c.count_avoiders < 1 || c.count_perms < 1)
    throw InputError("caps must be positive");
  if (config.depth < 0) throw InputError("depth must be nonnegative");
  if (config.h_cap < 0) throw InputError("h_cap must be nonnegative");
  if (config.format && *config.format != "json" && *config.format != "text" && *config.format != "csv")
    throw InputError("format must be json, text or csv");
}

}  // namespace ordex

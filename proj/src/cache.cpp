#include "ordex/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordex/graph_io.hpp"

namespace ordex {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string ResultCache::key(Flavor flavor, const PatternGraph& pattern, int n, int m) {
  std::ostringstream out;
  out << "v" << kSchemaVersion << '|' << to_string(flavor) << '|' << compact_form(pattern) << '|'
      << n << '|' << m;
  return out.str();
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / name;
}

std::optional<CachedExtremal> ResultCache::load(Flavor flavor, const PatternGraph& pattern,
                                                int n, int m) const {
  const std::string k = key(flavor, pattern, n, m);
  std::ifstream in(path_for(k));
  if (!in) return std::nullopt;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
    if (doc.at("key").get<std::string>() != k) return std::nullopt;
    CachedExtremal record;
    record.flavor = flavor;
    record.pattern = pattern;
    record.n = n;
    record.m = m;
    record.value = doc.at("value").get<std::size_t>();
    record.witness = parse_compact(doc.at("witness").get<std::string>());
    return record;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const CachedExtremal& record) const {
  std::filesystem::create_directories(dir_);
  const std::string k = key(record.flavor, record.pattern, record.n, record.m);
  nlohmann::json doc = {
      {"schema_version", kSchemaVersion},
      {"key", k},
      {"flavor", std::string(to_string(record.flavor))},
      {"pattern", compact_form(record.pattern)},
      {"n", record.n},
      {"m", record.m},
      {"value", record.value},
      {"witness", compact_form(record.witness)},
  };
  auto target = path_for(k);
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::trunc);
    out << doc.dump(2) << '\n';
  }
  std::filesystem::rename(temp, target);
}

}  // namespace ordex

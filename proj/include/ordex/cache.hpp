#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ordex/pattern_graph.hpp"

namespace ordex {

/// One stored extremal value. `pattern` is the key pattern (the canonical
/// variant for Bipartite), `witness` the host attaining `value` for it.
struct CachedExtremal {
  Flavor flavor = Flavor::Ordered;
  PatternGraph pattern;
  int n = 0;
  int m = 0;
  std::size_t value = 0;
  PatternGraph witness;
};

/// JSON file per record under a directory, named by a hash of the key.
/// Records with another schema version, or whose stored key differs from the
/// requested one, are treated as misses.
class ResultCache {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  static std::string key(Flavor flavor, const PatternGraph& pattern, int n, int m);
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<CachedExtremal> load(Flavor flavor, const PatternGraph& pattern, int n,
                                     int m) const;
  // Creates the directory on first write.
  void store(const CachedExtremal& record) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace ordex

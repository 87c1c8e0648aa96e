#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ordex/solver.hpp"

namespace ordex {

/// Settings shared by every subcommand. Loaded from an optional JSON file;
/// command-line flags and ORDEX_CACHE_DIR take precedence over the file.
struct RunConfig {
  SolverCaps caps;
  int depth = 12;   // bound-engine rule depth
  int h_cap = 2;    // largest H_k tried by the lower-bound engine
  std::optional<std::string> cache_dir;
  std::optional<std::string> format;  // json | text | csv, per subcommand default when unset
  std::uint64_t seed = 1;
};

// Keys: caps{ordered,bipartite,cyclic,count_avoiders,count_perms}, depth,
// h_cap, cache_dir, format, seed. Unknown keys and non-positive caps are errors.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Positive caps, depth >= 0, known format.
void validate(const RunConfig& config);

}  // namespace ordex

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordex::cli {

// Runs one command line (without the program name). Returns the exit status:
// 0 success, 1 refusal (JSON diagnostic on `out`), 2 usage or input error
// (message on `err`).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordex::cli

#pragma once

#include <string>
#include <string_view>

#include "ordex/pattern_graph.hpp"

namespace ordex {

/// Parse failure with the 1-based location of the first offending token.
class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Graph text format:
//   ordered N | bipartite NU NV | cyclic N
//   one edge per line: two 1-based indices (bipartite: U index, then V index)
// or the matrix format:
//   matrix R C, then R lines of C characters from {0,1} (rows = U).
// '#' starts a comment; blank lines are ignored.
PatternGraph parse_graph(std::string_view text);

// Canonical text: header line, then the sorted edge list, one edge per line.
std::string serialize_graph(const PatternGraph& graph);

// The canonical text on one line with "; " between lines, e.g.
// "bipartite 2 2; 1 1; 2 2".
std::string compact_form(const PatternGraph& graph);
PatternGraph parse_compact(std::string_view text);

PatternGraph read_graph_file(const std::string& path);

}  // namespace ordex

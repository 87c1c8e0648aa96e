#include "ordex/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace ordex {

ParseError::ParseError(int line, int column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int to_int(const Token& token, int line) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
  if (ec != std::errc{} || ptr != token.text.data() + token.text.size())
    throw ParseError(line, token.column, "expected an integer, got '" + std::string(token.text) + "'");
  return value;
}

struct Line {
  int number;
  std::string_view content;  // comment stripped
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = tokenize(line).empty();
    if (!blank) out.push_back({number, line});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

PatternGraph parse_matrix(const std::vector<Line>& lines, int rows, int cols) {
  if (static_cast<int>(lines.size()) - 1 < rows) {
    int line = lines.back().number;
    throw ParseError(line, 1, "matrix needs " + std::to_string(rows) + " rows, found " +
                                  std::to_string(lines.size() - 1));
  }
  if (static_cast<int>(lines.size()) - 1 > rows)
    throw ParseError(lines[rows + 1].number, 1, "unexpected content after the last matrix row");
  std::vector<Edge> edges;
  for (int r = 1; r <= rows; ++r) {
    auto tokens = tokenize(lines[r].content);
    if (tokens.size() != 1)
      throw ParseError(lines[r].number, tokens[1].column, "matrix rows must not contain spaces");
    const auto& row = tokens[0];
    for (std::size_t c = 0; c < row.text.size(); ++c) {
      char ch = row.text[c];
      if (ch != '0' && ch != '1')
        throw ParseError(lines[r].number, row.column + static_cast<int>(c),
                         std::string("matrix entries must be 0 or 1, got '") + ch + "'");
    }
    if (static_cast<int>(row.text.size()) != cols)
      throw ParseError(lines[r].number, row.column,
                       "row has " + std::to_string(row.text.size()) + " entries, expected " +
                           std::to_string(cols));
    for (int c = 0; c < cols; ++c)
      if (row.text[c] == '1') edges.push_back({r, c + 1});
  }
  return PatternGraph::bipartite(rows, cols, std::move(edges));
}

}  // namespace

PatternGraph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header (ordered N | bipartite NU NV | cyclic N | matrix R C)");
  const Line& head = lines.front();
  auto header = tokenize(head.content);
  const std::string_view kind = header[0].text;

  std::size_t want = (kind == "bipartite" || kind == "matrix") ? 3 : 2;
  if (kind != "ordered" && kind != "cyclic" && kind != "bipartite" && kind != "matrix")
    throw ParseError(head.number, header[0].column,
                     "malformed header: unknown graph kind '" + std::string(kind) + "'");
  if (header.size() != want)
    throw ParseError(head.number, header[0].column,
                     "malformed header: '" + std::string(kind) + "' takes " +
                         std::to_string(want - 1) + " size(s)");
  const int a = to_int(header[1], head.number);
  const int b = want == 3 ? to_int(header[2], head.number) : 0;
  if (a < 0 || b < 0)
    throw ParseError(head.number, header[1].column, "malformed header: negative size");

  if (kind == "matrix") return parse_matrix(lines, a, b);

  const bool bip = kind == "bipartite";
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    auto tokens = tokenize(line.content);
    if (tokens.size() != 2)
      throw ParseError(line.number, tokens[0].column, "an edge line holds exactly two indices");
    int x = to_int(tokens[0], line.number);
    int y = to_int(tokens[1], line.number);
    if (bip) {
      if (x < 1 || x > a)
        throw ParseError(line.number, tokens[0].column,
                         "row index " + std::to_string(x) + " out of range 1.." + std::to_string(a));
      if (y < 1 || y > b)
        throw ParseError(line.number, tokens[1].column,
                         "column index " + std::to_string(y) + " out of range 1.." + std::to_string(b));
    } else {
      for (int t = 0; t < 2; ++t) {
        int v = t == 0 ? x : y;
        if (v < 1 || v > a)
          throw ParseError(line.number, tokens[t].column,
                           "vertex index " + std::to_string(v) + " out of range 1.." + std::to_string(a));
      }
      if (x == y) throw ParseError(line.number, tokens[0].column, "loop at vertex " + std::to_string(x));
    }
    Edge e{x, y};
    if (!bip && e.first > e.second) std::swap(e.first, e.second);
    if (!seen.insert(e).second)
      throw ParseError(line.number, tokens[0].column,
                       "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    edges.push_back(e);
  }
  if (bip) return PatternGraph::bipartite(a, b, std::move(edges));
  if (kind == "cyclic") return PatternGraph::cyclic(a, std::move(edges));
  return PatternGraph::ordered(a, std::move(edges));
}

std::string serialize_graph(const PatternGraph& graph) {
  std::ostringstream out;
  out << to_string(graph.flavor()) << ' ' << graph.nU();
  if (graph.is_bipartite()) out << ' ' << graph.nV();
  out << '\n';
  for (const auto& e : graph.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

std::string compact_form(const PatternGraph& graph) {
  std::string text = serialize_graph(graph);
  text.pop_back();
  std::string out;
  for (char c : text) {
    if (c == '\n')
      out += "; ";
    else
      out += c;
  }
  return out;
}

PatternGraph parse_compact(std::string_view text) {
  std::string lines(text);
  for (char& c : lines)
    if (c == ';') c = '\n';
  return parse_graph(lines);
}

PatternGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace ordex

#pragma once

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "projwidth/embedded_graph.hpp"

namespace projwidth {

/// Malformed input file; `line` is 1-based (0 when not tied to a line).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

struct Document {
  std::vector<Line> lines;  // non-comment, non-blank
  std::string label;
};

inline std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

inline Document read_document(std::string_view text) {
  Document doc;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    for (char ch : line)
      if (ch < 0x20 || ch > 0x7e) {
        throw ParseError(number, ch == '\r' ? "CR line ending" : "non-printable character");
      }
    if (!line.empty() && line.front() == '#') {
      constexpr std::string_view key = "# label ";
      if (line.substr(0, key.size()) == key) doc.label = std::string(line.substr(key.size()));
      continue;
    }
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    doc.lines.push_back({number, std::move(tokens)});
  }
  return doc;
}

inline int to_int(const Line& line, std::string_view tok, const char* what) {
  int value = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size() || value < 0)
    throw ParseError(line.number, std::string("malformed ") + what + " '" +
                                      std::string(tok) + "'");
  return value;
}

inline std::pair<int, int> read_header(const Document& doc, std::string_view magic) {
  if (doc.lines.empty()) throw ParseError(1, "malformed header: empty input");
  const Line& h = doc.lines.front();
  if (h.tokens.size() != 3 || h.tokens[0] != magic)
    throw ParseError(h.number, "malformed header, expected '" + std::string(magic) + " <n> <m>'");
  return {to_int(h, h.tokens[1], "vertex count"), to_int(h, h.tokens[2], "edge count")};
}

/// Families whose files must describe simple graphs.
inline bool simple_family_label(const std::string& label) {
  const std::string first = label.substr(0, label.find(' '));
  return first == "grid" || first == "mycielski" || first == "fuzz";
}

}  // namespace detail

/// Parses a PQ1 scheme. Every error names the offending line.
inline EmbeddedGraph parse_pq1(std::string_view text) {
  const detail::Document doc = detail::read_document(text);
  const auto [n, m] = detail::read_header(doc, "PQ1");
  const auto& lines = doc.lines;
  if (static_cast<int>(lines.size()) - 1 < m + n) {
    const int at = lines.empty() ? 1 : lines.back().number;
    throw ParseError(at, "truncated input: expected " + std::to_string(m) +
                             " edge lines and " + std::to_string(n) + " rotation lines");
  }
  if (static_cast<int>(lines.size()) - 1 > m + n)
    throw ParseError(lines[1 + m + n].number, "unexpected line after the rotations");

  std::vector<EmbeddedEdge> edges(m);
  std::vector<char> defined(m, 0);
  for (int i = 0; i < m; ++i) {
    const detail::Line& l = lines[1 + i];
    if (l.tokens.size() != 5 || l.tokens[0] != "E")
      throw ParseError(l.number, "malformed edge line, expected 'E <eid> <u> <v> <+|->'");
    const int e = detail::to_int(l, l.tokens[1], "edge-id");
    if (e >= m) throw ParseError(l.number, "edge-id " + std::to_string(e) + " out of range");
    if (defined[e]) throw ParseError(l.number, "duplicate edge-id " + std::to_string(e));
    defined[e] = 1;
    const int u = detail::to_int(l, l.tokens[2], "endpoint");
    const int v = detail::to_int(l, l.tokens[3], "endpoint");
    if (u >= n || v >= n) throw ParseError(l.number, "endpoint out of range");
    Sign s;
    if (l.tokens[4] == "+")
      s = Sign::Positive;
    else if (l.tokens[4] == "-")
      s = Sign::Negative;
    else
      throw ParseError(l.number, "malformed sign '" + std::string(l.tokens[4]) + "'");
    if (u == v && detail::simple_family_label(doc.label))
      throw ParseError(l.number, "loop in a file labelled as a simple quadrangulation");
    edges[e] = {u, v, s};
  }

  std::vector<std::vector<EdgeId>> rot(n);
  std::vector<char> has_rot(n, 0);
  std::vector<int> uses(m, 0);
  std::vector<int> first_use(m, 0);
  for (int i = 0; i < n; ++i) {
    const detail::Line& l = lines[1 + m + i];
    if (l.tokens.size() < 3 || l.tokens[0] != "R")
      throw ParseError(l.number, "malformed rotation line, expected 'R <vid> <deg> <eids...>'");
    const int v = detail::to_int(l, l.tokens[1], "vertex id");
    if (v >= n) throw ParseError(l.number, "vertex id " + std::to_string(v) + " out of range");
    if (has_rot[v]) throw ParseError(l.number, "duplicate rotation for vertex " + std::to_string(v));
    has_rot[v] = 1;
    const int deg = detail::to_int(l, l.tokens[2], "degree");
    if (static_cast<int>(l.tokens.size()) - 3 != deg)
      throw ParseError(l.number, "degree mismatch: declared " + std::to_string(deg) +
                                     ", listed " + std::to_string(l.tokens.size() - 3));
    for (std::size_t j = 3; j < l.tokens.size(); ++j) {
      const int e = detail::to_int(l, l.tokens[j], "edge-id");
      if (e >= m) throw ParseError(l.number, "dangling edge-id " + std::to_string(e));
      if (++uses[e] > 2)
        throw ParseError(l.number, "edge multiplicity: edge-id " + std::to_string(e) +
                                       " listed more than twice");
      if (uses[e] == 1) first_use[e] = l.number;
      const auto& ed = edges[e];
      if (ed.u != v && ed.v != v)
        throw ParseError(l.number, "edge-id " + std::to_string(e) +
                                       " is not incident to vertex " + std::to_string(v));
      rot[v].push_back(e);
    }
  }
  for (int e = 0; e < m; ++e) {
    if (uses[e] == 2) continue;
    throw ParseError(uses[e] ? first_use[e] : lines[1 + e].number,
                     "edge multiplicity: edge-id " + std::to_string(e) + " listed " +
                         std::to_string(uses[e]) + " time(s)");
  }
  // Each non-loop endpoint must list the edge once.
  for (VertexId v = 0; v < n; ++v)
    for (EdgeId e : rot[v]) {
      const auto& ed = edges[e];
      if (ed.is_loop()) continue;
      const int here = static_cast<int>(std::count(rot[v].begin(), rot[v].end(), e));
      if (here != 1)
        throw ParseError(lines[1 + m + v].number,
                         "edge multiplicity: edge-id " + std::to_string(e) +
                             " listed twice at one endpoint");
    }
  try {
    return EmbeddedGraph::from_edge_rotations(n, std::move(edges), rot, doc.label);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(0, err.what());
  }
}

inline std::string serialize_pq1(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "PQ1 " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  if (!g.label().empty()) out << "# label " << g.label() << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    out << "E " << e << ' ' << ed.u << ' ' << ed.v << ' '
        << (ed.sign == Sign::Positive ? '+' : '-') << '\n';
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "R " << v << ' ' << g.degree(v);
    for (DartId d : g.rotation(v)) out << ' ' << edge_of(d);
    out << '\n';
  }
  return out.str();
}

/// Abstract graph as read from an AG1 file.
struct LabelledGraph {
  Graph graph;
  std::string label;
};

inline LabelledGraph parse_ag1(std::string_view text) {
  const detail::Document doc = detail::read_document(text);
  const auto [n, m] = detail::read_header(doc, "AG1");
  if (static_cast<int>(doc.lines.size()) - 1 != m)
    throw ParseError(doc.lines.back().number,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(doc.lines.size() - 1));
  LabelledGraph out{Graph(n), doc.label};
  for (int i = 0; i < m; ++i) {
    const detail::Line& l = doc.lines[1 + i];
    if (l.tokens.size() != 3 || l.tokens[0] != "E")
      throw ParseError(l.number, "malformed edge line, expected 'E <u> <v>'");
    const int u = detail::to_int(l, l.tokens[1], "endpoint");
    const int v = detail::to_int(l, l.tokens[2], "endpoint");
    if (u >= n || v >= n) throw ParseError(l.number, "endpoint out of range");
    if (u == v && detail::simple_family_label(doc.label))
      throw ParseError(l.number, "loop in a file labelled as a simple graph");
    out.graph.add_edge(u, v);
  }
  return out;
}

inline std::string serialize_ag1(const Graph& g, const std::string& label = {}) {
  std::ostringstream out;
  out << "AG1 " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  if (!label.empty()) out << "# label " << label << '\n';
  for (auto [u, v] : g.edges()) out << "E " << u << ' ' << v << '\n';
  return out.str();
}

/// Either kind of instance file, dispatched on the header magic.
using Instance = std::variant<EmbeddedGraph, LabelledGraph>;

inline Instance parse_instance(std::string_view text) {
  const detail::Document doc = detail::read_document(text);
  if (!doc.lines.empty() && doc.lines.front().tokens[0] == "AG1") return parse_ag1(text);
  return parse_pq1(text);
}

}  // namespace projwidth

#include "eihg/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace eihg {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-empty, non-comment lines split into tokens.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = split_ws(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

VertexId parse_label(std::string_view tok, std::size_t line) {
  VertexId v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    fail(line, "expected a vertex label, got '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<VertexId> parse_labels(const Line& l) {
  std::vector<VertexId> out;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) out.push_back(parse_label(l.tokens[i], l.number));
  return out;
}

Hypergraph hypergraph_from_lines(std::span<const Line> lines) {
  if (lines.empty() || lines.front().tokens[0] != "vertices") {
    fail(lines.empty() ? 0 : lines.front().number, "expected a 'vertices' header line");
  }
  std::vector<VertexId> vertices = parse_labels(lines.front());
  std::vector<Edge> edges;
  for (const auto& l : lines.subspan(1)) {
    if (l.tokens[0] != "edge") fail(l.number, "expected 'edge', got '" + std::string(l.tokens[0]) + "'");
    edges.push_back(parse_labels(l));
    if (edges.back().size() < 2) fail(l.number, "an edge needs at least two vertices");
  }
  return Hypergraph::make(std::move(vertices), std::move(edges));
}

void append_labels(std::string& out, std::string_view head, std::span<const VertexId> labels) {
  out += head;
  for (VertexId v : labels) {
    out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  auto lines = tokenize(text);
  return hypergraph_from_lines(lines);
}

std::string render_hypergraph(const Hypergraph& h) {
  std::string out;
  append_labels(out, "vertices", h.vertices());
  for (const auto& e : h.edges()) append_labels(out, "edge", e);
  return out;
}

Digraph parse_digraph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens[0] != "vertices") {
    fail(lines.empty() ? 0 : lines.front().number, "expected a 'vertices' header line");
  }
  std::vector<VertexId> vertices = parse_labels(lines.front());
  std::vector<Digraph::Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] != "arc" || l.tokens.size() != 3) fail(l.number, "expected 'arc <from> <to>'");
    arcs.emplace_back(parse_label(l.tokens[1], l.number), parse_label(l.tokens[2], l.number));
  }
  return Digraph::make(std::move(vertices), std::move(arcs));
}

std::string render_digraph(const Digraph& d) {
  std::string out;
  append_labels(out, "vertices", d.vertices());
  for (auto [u, v] : d.arcs()) {
    out += "arc " + std::to_string(u) + ' ' + std::to_string(v) + '\n';
  }
  return out;
}

Hypergraph read_hypergraph_file(const std::string& path) { return parse_hypergraph(slurp(path)); }

Digraph read_digraph_file(const std::string& path) { return parse_digraph(slurp(path)); }

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

std::vector<FixtureRecord> parse_fixture_records(std::string_view text) {
  auto lines = tokenize(text);
  std::vector<FixtureRecord> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto& head = lines[i];
    if (head.tokens[0] != "fixture" || head.tokens.size() != 3) {
      fail(head.number, "expected 'fixture <name> <kind>'");
    }
    std::size_t j = i + 1;
    while (j < lines.size() && lines[j].tokens[0] != "fixture") ++j;
    out.push_back({std::string(head.tokens[1]), std::string(head.tokens[2]),
                   hypergraph_from_lines(std::span<const Line>(lines).subspan(i + 1, j - i - 1))});
    i = j;
  }
  return out;
}

}  // namespace eihg

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eihg/hypergraph.hpp"

namespace eihg {

// Plain-text hypergraph format:
//
//   # comment
//   vertices 1 2 3 4
//   edge 1 2 3
//   edge 2 3 4
//
// `vertices` comes first and appears once. Rendering emits ascending labels
// and edge lines in lexicographic order, so render() is canonical and
// parse(render(h)) == h. The digraph format is the same with `arc u v` lines.

Hypergraph parse_hypergraph(std::string_view text);
std::string render_hypergraph(const Hypergraph& h);

Digraph parse_digraph(std::string_view text);
std::string render_digraph(const Digraph& d);

Hypergraph read_hypergraph_file(const std::string& path);
Digraph read_digraph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// A named hypergraph from a multi-record file. Records start with
// `fixture <name> <kind>` and the body is a hypergraph in the format above.
struct FixtureRecord {
  std::string name;
  std::string kind;
  Hypergraph hypergraph;
};

std::vector<FixtureRecord> parse_fixture_records(std::string_view text);

}  // namespace eihg

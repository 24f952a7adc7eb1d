#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ghcut/ghtree.hpp"
#include "ghcut/graph.hpp"

namespace ghcut {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// DIMACS-like graph format: comments `c ...`, header `p ghct <n> <m>`, edges
// `e <u> <v> <w>` with 1-based ids. Without a header, plain whitespace-
// separated `u v w` lines with 0-based ids are accepted. Throws ParseError
// with the offending line number.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Tree text format: header `t <|U|> <n>`, edge lines `T <a> <b> <w>`, mapping
// lines `F <v> <rep>` for non-terminal vertices. Rewriting a parsed tree
// reproduces the bytes.
void write_tree(std::ostream& out, const GhTree& t);
GhTree read_tree(std::istream& in);
GhTree read_tree_file(const std::string& path);

// JSON mirror: {"schema":1, "terminals":[...], "edges":[{"a","b","w"}],
// "f":{"v":rep}}.
std::string tree_to_json(const GhTree& t);
GhTree tree_from_json(const std::string& text);

}  // namespace ghcut

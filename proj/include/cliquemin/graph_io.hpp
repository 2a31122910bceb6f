#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cliquemin/graph.hpp"

namespace cliquemin {

/// Decodes one graph6 record. An optional ">>graph6<<" header and a trailing
/// newline are accepted. Throws ParseError carrying the offending byte offset
/// for a bad size field, a character outside '?'..'~', a truncated or overlong
/// bit field, or non-zero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6 (no header, no trailing newline).
std::string serialize_graph6(const Graph& g);

/// A graph read from an edge-list file together with the original vertex
/// identifiers: labels[v] is the token that was mapped to dense index v.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;
};

/// Parses the "n m" header followed by m "u v" lines. When every identifier
/// is an integer in [0, n) the identity labelling is kept; otherwise tokens
/// are numbered in order of first appearance. '#' starts a comment.
LoadedGraph parse_edge_list(std::string_view text);

std::string serialize_edge_list(const Graph& g);

/// Reads a file holding either a graph6 line or an edge list (detected by
/// content: an edge list starts with two integers).
LoadedGraph load_graph_file(const std::filesystem::path& path);

}  // namespace cliquemin

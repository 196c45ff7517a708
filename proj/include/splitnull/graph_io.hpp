#pragma once

#include <string>
#include <string_view>

#include "splitnull/graph.hpp"

namespace splitnull {

/// Decodes one graph6 line. A trailing newline and an optional ">>graph6<<"
/// prefix are accepted; anything else malformed throws ParseError.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 (no trailing newline). Uses the 4-byte size header
/// for 63 <= n <= 258047 and the 8-byte header beyond.
std::string write_graph6(const Graph& g);

/// Parses the edge-list format: the first non-comment line is the vertex
/// count n, then one "u v" pair per line with 0 <= u, v < n. '#' starts a
/// comment. Duplicate edges are ignored; self-loops are an error.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

enum class GraphFormat { graph6, edges, automatic };

GraphFormat parse_format_name(std::string_view name);

/// Parses text in the given format; `automatic` picks edge-list when the first
/// meaningful line is a bare integer and graph6 otherwise.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Reads a whole file ("-" means standard input). Throws ParseError on I/O failure.
std::string read_text(const std::string& path);

}  // namespace splitnull

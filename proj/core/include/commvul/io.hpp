#pragma once

#include <string>
#include <vector>

#include "commvul/graph.hpp"

namespace commvul {

struct LoadedGraph {
    Graph graph;
    Graph::LoadStats stats;
};

/// Parses line-oriented edge text: two whitespace-separated integer labels
/// per line, blank lines and `#` comments ignored. Self-loops and duplicate
/// edges are dropped and counted. Throws ParseError with the line number on
/// malformed lines and DomainError on an empty edge set.
LoadedGraph load_edge_list(const std::string& text);

/// Parses a square 0/1 comma-separated adjacency matrix without header.
/// Nodes are labeled 1..n in row order. Throws ParseError on non-square
/// input, values other than 0/1, a nonzero diagonal, or an asymmetric
/// entry (named as (row, column), 1-based).
LoadedGraph load_adjacency_csv(const std::string& text);

/// Canonical edge-list text: one "u v" line per edge, ascending.
/// load_edge_list(serialize_edge_list(g)) reconstructs an identical graph.
std::string serialize_edge_list(const Graph& g);

std::string read_file(const std::string& path);           ///< throws Error with path
void write_file(const std::string& path, const std::string& content);

/// Loads a graph from disk; a ".csv" suffix selects the adjacency format,
/// anything else the edge-list format. `format` may force "edges" or
/// "adjacency".
LoadedGraph load_graph_file(const std::string& path, const std::string& format = "auto");

} // namespace commvul

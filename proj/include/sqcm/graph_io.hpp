#pragma once

#include <iosfwd>
#include <string>

#include "sqcm/graph.hpp"

namespace sqcm {

/// Edge-list text format: one edge per line, two whitespace-separated vertex
/// names, '#' starts a comment, blank lines are ignored. Vertex ids follow
/// first appearance. Parse errors carry line and column.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
std::string emit_edge_list(const Graph& g);

/// graph6 one-line format, n <= 62.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

/// graph6 of the lexicographically smallest encoding over all vertex
/// relabelings. Exact but factorial; capped at n <= 8.
std::string canonical_graph6(const Graph& g);

/// Builtin graph specs, or a path to an edge-list file:
///   c<t>            cycle, e.g. c5
///   p<k>            path with k edges; p3 carries the x,y,z,w labeling
///   k<m>,<n>        complete bipartite, e.g. k2,2
///   k2              single edge
///   triangle        3-cycle on a,b,c
///   doublestar:<s>,<t>
///   whisker:<spec>  whisker applied to another spec or file
///   g6:<string>     inline graph6
Graph graph_from_spec(const std::string& spec);

}  // namespace sqcm

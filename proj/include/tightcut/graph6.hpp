#pragma once

#include <string>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

/// Decode one line of graph6 (short form, n <= 62).  An optional
/// ">>graph6<<" prefix is accepted.  Malformed input raises ParseError
/// with the offending byte offset.
Multigraph from_graph6(const std::string& line);

/// Encode a simple graph in graph6.  Vertices are taken in sorted id
/// order.  Parallel edges are rejected: multigraphs serialize via the
/// JSON edge-list format instead.
std::string to_graph6(const Multigraph& g);

std::vector<Multigraph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Multigraph>& graphs);

}  // namespace tightcut

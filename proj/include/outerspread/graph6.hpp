#pragma once

#include <string>

#include "outerspread/graph.hpp"

namespace osp {

// graph6 text format: printable ASCII (bytes 63..126), upper triangle of the
// adjacency matrix packed column by column into 6-bit groups.  Encoding
// supports n up to Graph::max_vertices; decode accepts an optional
// ">>graph6<<" header and rejects malformed input (bad length, bytes outside
// the printable range, nonzero padding bits) with std::invalid_argument.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace osp

#pragma once

#include <string>
#include <vector>

#include "outerspread/graph.hpp"

namespace osp {

// One representative per isomorphism class of outerplanar graphs on n labeled
// slots, grown level by level: every outerplanar graph with an edge stays
// outerplanar after deleting one, so adding single edges to the previous level
// and deduplicating by canonical form reaches every class exactly once.
// Output is sorted by canonical form; connected_only filters at emission.
struct EnumeratedGraph {
    std::string canon;
    Graph graph;
};

std::vector<EnumeratedGraph> enumerate_outerplanar(int n, bool connected_only);

}  // namespace osp

#pragma once

#include <vector>

#include "outerspread/graph.hpp"

namespace osp {

// Edge partition into biconnected components; every returned block is the edge
// list of one block with original vertex labels.  Isolated vertices contribute
// no block.
std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g);

// Polynomial minor tests.  K4: a block reduces to a single edge under
// series/parallel reduction iff it has no K4 minor (a stuck block has min
// degree 3 and therefore a K4 subdivision).  K2,3: every alive edge carries the
// number of pairwise internally disjoint length >= 2 strands it stands for;
// three strands meeting between one vertex pair is exactly a K2,3 subdivision.
// A block that is not series-parallel falls back to a flow argument: K2,3 is a
// minor iff some vertex pair is joined by three internally disjoint paths of
// length >= 2.
bool has_k4_minor(const Graph& g);
bool has_k23_minor(const Graph& g);

// No K4 minor and no K2,3 minor.
bool is_outerplanar(const Graph& g);

}  // namespace osp

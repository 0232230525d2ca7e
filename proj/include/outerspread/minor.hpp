#pragma once

#include <optional>
#include <vector>

#include "outerspread/graph.hpp"

namespace osp {

enum class MinorTarget { K4, K23 };

// branch_sets are disjoint, each inducing a connected subgraph, with an edge of
// g between every pair of sets that is adjacent in the target.  For K4 the
// four sets are pairwise adjacent; for K2,3 sets 0..1 are one side and 2..4
// the other, with all six cross adjacencies present.
struct MinorWitness {
    MinorTarget target;
    std::vector<std::vector<int>> branch_sets;
};

bool validate_witness(const Graph& g, const MinorWitness& w);

// Exact minor search: decides via the polynomial certificates, then builds a
// witness by walking contractions that keep the minor alive until the target
// appears as a subgraph pattern.  Runs in polynomial time.
std::optional<MinorWitness> find_minor(const Graph& g, MinorTarget target);

}  // namespace osp

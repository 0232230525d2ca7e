#pragma once

#include <string>
#include <vector>

#include "outerspread/graph.hpp"

namespace osp {

// Canonical labeling via branch-and-bound over vertex orders.  The canonical
// order minimizes the packed upper-triangle bitstring of the relabeled
// adjacency matrix, so two graphs are isomorphic exactly when their canonical
// forms are equal strings.

// Permutation old label -> new label realizing the canonical order.
std::vector<int> canonical_relabeling(const Graph& g);

// graph6 string of the canonically relabeled graph.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace osp

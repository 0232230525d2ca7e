#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outerspread/graph.hpp"
#include "outerspread/report.hpp"

namespace osp {

struct SearchResult {
    Graph best;
    double best_spread = 0.0;
    // distance from best_spread down to the best candidate outside the tie
    // set; 0 when nothing else was examined
    double runner_up_gap = 0.0;
    // canonical forms within 1e-9 of best_spread, sorted; best is ties.front()
    std::vector<std::string> ties;
};

// Argmax of spread over all connected outerplanar isomorphism classes on n
// vertices (2 <= n <= 11). Ties broken by canonical form order.
SearchResult exhaustive_max_spread(int n, int workers = 0);

struct FanScanResult {
    LinearForestSpec best_spec;
    double best_spread = 0.0;
    // columns: spec, n, forest_edges, spread, lambda1, lambda_n; sorted by
    // spread descending, parts lexicographically as the tie-break; holds at
    // most table_limit rows (the top ones), best row always first
    Table full_table;
};

// Evaluates spread(join(K1, forest)) for every partition of n-1 into path
// orders; exact argmax even when the stored table is truncated. Partition
// enumeration is exact for n <= 81.
FanScanResult fan_family_max(int n, int workers = 0, std::size_t table_limit = 100000);

// Hill-climb from g0 (connected outerplanar) over single-edge toggles and
// reattachment moves, first strict improvement (> 1e-9) per step, at most
// budget accepted steps, move order shuffled deterministically from seed.
SearchResult local_search(const Graph& g0, long long budget, std::uint64_t seed);

// Per-n summary rows: fan spread, fan-family winner and its gap, exhaustive
// winner when n <= 11, and the algebraic lower-bound margin.
Table conjecture_scan(int n_lo, int n_hi, int workers = 0);

// Hub-plus-linear-forest shape test used by searches and reports: the parts
// list of the forest when g is join(K1, linear forest), empty otherwise.
struct FanShape {
    bool is_fan = false;
    int hub = -1;
    std::vector<int> parts;
};

FanShape classify_fan_shape(const Graph& g);

}  // namespace osp

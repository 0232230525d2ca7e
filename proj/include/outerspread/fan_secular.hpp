#pragma once

#include "outerspread/graph.hpp"

namespace osp {

// Extreme adjacency eigenvalues of join(K1, linear_forest(spec)) without a
// dense solve.  A path on k vertices has eigenvalues mu_j = 2 cos(j pi/(k+1))
// with orthonormal eigenvectors sin(i j pi/(k+1)) scaled by sqrt(2/(k+1)); the
// hub couples to component j with weight c_j = (sum of entries)^2, which is
// 2/(k+1) * cot^2(j pi / (2(k+1))) for odd j and zero for even j.  In the path
// eigenbasis the fan matrix is an arrowhead whose extreme eigenvalues are the
// outer roots of the secular function f(lambda) = lambda - sum_i c_i /
// (lambda - mu_i); even-j path eigenvalues stay eigenvalues of the fan and can
// undercut the bottom root.
struct FanExtremes {
    double lambda1;
    double lambda_n;
};

FanExtremes fan_extremes(const LinearForestSpec& spec);
double fan_spread_fast(const LinearForestSpec& spec);

// Precomputed per-path-size data for bulk partition scans.  weighted[k]
// holds the hub-coupled poles of a k-path in j order (mu descending, j = 1
// first); even_min[k] is the most negative uncoupled path eigenvalue (+2.0
// when k = 1 has none).
struct FanPoleTable {
    struct Pole {
        double mu;
        double c;
    };
    std::vector<std::vector<Pole>> weighted;
    std::vector<double> even_min;

    int max_part() const { return static_cast<int>(weighted.size()) - 1; }
};

FanPoleTable build_fan_pole_table(int max_part);

// Extreme eigenvalues of join(K1, forest with the given parts), parts sorted
// descending with repeats adjacent (the canonical partition layout).  Uses
// safeguarded Newton on the secular function when the total is large enough
// to guarantee the bottom root sits below -2; falls back to bisection
// otherwise.  Matches fan_extremes to solver precision.
FanExtremes fan_extremes_tabulated(const FanPoleTable& table, const int* parts, int count);

}  // namespace osp

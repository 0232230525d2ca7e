#pragma once

#include <vector>

#include "outerspread/graph.hpp"
#include "outerspread/jacobi.hpp"

namespace osp {

SymMatrix adjacency_matrix(const Graph& g);

std::vector<double> adjacency_multiply(const Graph& g, const std::vector<double>& v);

struct SpreadResult {
    double lambda1;
    double lambda_n;
    double spread;
};

SpreadResult spread(const Graph& g, double tol = 1e-10);

// (v' A v) / (v' v); throws on dimension mismatch or zero vector.
double rayleigh(const SymMatrix& m, const std::vector<double>& v);
double rayleigh(const Graph& g, const std::vector<double>& v);

// Extreme eigenpairs of a connected graph.  x is the top eigenvector scaled so
// its maximum entry is exactly 1, attained at w (first index on ties); all its
// entries are strictly positive.  z is the bottom eigenvector scaled so
// max |z| = 1, attained at w_abs, with the global sign chosen to make z[w]
// positive (z[w_abs] positive if z[w] vanishes).  Both satisfy
// ||A y - lambda y||_inf <= 1e-9.
struct ExtremalPairs {
    double lambda1 = 0.0;
    std::vector<double> x;
    int w = 0;
    double lambda_n = 0.0;
    std::vector<double> z;
    int w_abs = 0;
};

ExtremalPairs extremal_pairs(const Graph& g);

// Spread lower bound for join(K1, path(n-1)) from the test vectors
// (-1 + sqrt(n), 1, ..., 1) and (-1 - sqrt(n), 1, ..., 1). Equals
// 2*sqrt(n) - 2/(sqrt(n)*(n-1)) exactly, which clears 2*sqrt(n) - 1/n
// once n >= 6. The spread itself clears that floor from n = 4 on.
double fan_spread_lower_bound(int n);

}  // namespace osp

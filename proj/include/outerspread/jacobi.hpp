#pragma once

#include <vector>

namespace osp {

struct SymMatrix {
    int n = 0;
    std::vector<double> a;  // row-major, n*n

    static SymMatrix zero(int n);
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct EigenSystem {
    std::vector<double> values;   // descending
    std::vector<double> vectors;  // row-major, row k = unit eigenvector of values[k]; empty unless requested
    double off_norm = 0.0;        // final off-diagonal Frobenius norm
    int sweeps = 0;

    const double* vector(int k) const { return vectors.data() + static_cast<std::size_t>(k) * n; }
    int n = 0;
};

// Cyclic Jacobi: each sweep rotates away every off-diagonal pair (p, q) with
// tan chosen as sign(theta)/(|theta| + sqrt(theta^2 + 1)), theta =
// (a_qq - a_pp)/(2 a_pq).  Converged when the off-diagonal Frobenius norm is
// at most tol; throws std::runtime_error after 50 sweeps without convergence
// and std::invalid_argument for non-symmetric or malformed input.
EigenSystem eig_symmetric(const SymMatrix& m, double tol = 1e-10, bool want_vectors = false);

}  // namespace osp

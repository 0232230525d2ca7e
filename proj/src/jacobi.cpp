#include "outerspread/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace osp {

namespace {

double off_diagonal_norm(const SymMatrix& m) {
    double sum = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) sum += m.at(i, j) * m.at(i, j);
    return std::sqrt(2.0 * sum);
}

}  // namespace

SymMatrix SymMatrix::zero(int n) {
    SymMatrix m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, 0.0);
    return m;
}

EigenSystem eig_symmetric(const SymMatrix& m, double tol, bool want_vectors) {
    const int n = m.n;
    if (n < 0 || m.a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("eig_symmetric: storage size does not match n");
    if (tol <= 0.0) throw std::invalid_argument("eig_symmetric: tol must be positive");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("eig_symmetric: matrix not symmetric");

    SymMatrix work = m;
    std::vector<double> vt;  // row k = current row of the accumulated transpose
    if (want_vectors) {
        vt.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) vt[static_cast<std::size_t>(i) * n + i] = 1.0;
    }

    constexpr int max_sweeps = 50;
    int sweeps = 0;
    double off = off_diagonal_norm(work);
    while (off > tol) {
        if (sweeps == max_sweeps)
            throw std::runtime_error("eig_symmetric: no convergence within 50 sweeps");
        ++sweeps;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = work.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (work.at(q, q) - work.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = work.at(p, p);
                const double aqq = work.at(q, q);
                work.at(p, p) = app - t * apq;
                work.at(q, q) = aqq + t * apq;
                work.at(p, q) = work.at(q, p) = 0.0;

                double* rp = work.a.data() + static_cast<std::size_t>(p) * n;
                double* rq = work.a.data() + static_cast<std::size_t>(q) * n;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = rp[k];
                    const double akq = rq[k];
                    rp[k] = c * akp - s * akq;
                    rq[k] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    work.at(k, p) = rp[k];
                    work.at(k, q) = rq[k];
                }
                if (want_vectors) {
                    double* vp = vt.data() + static_cast<std::size_t>(p) * n;
                    double* vq = vt.data() + static_cast<std::size_t>(q) * n;
                    for (int k = 0; k < n; ++k) {
                        const double wp = vp[k];
                        const double wq = vq[k];
                        vp[k] = c * wp - s * wq;
                        vq[k] = s * wp + c * wq;
                    }
                }
            }
        off = off_diagonal_norm(work);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return work.at(a, a) > work.at(b, b); });

    EigenSystem out;
    out.n = n;
    out.off_norm = off;
    out.sweeps = sweeps;
    out.values.resize(n);
    for (int k = 0; k < n; ++k) out.values[k] = work.at(order[k], order[k]);
    if (want_vectors) {
        out.vectors.resize(static_cast<std::size_t>(n) * n);
        for (int k = 0; k < n; ++k)
            std::copy_n(vt.data() + static_cast<std::size_t>(order[k]) * n, n,
                        out.vectors.data() + static_cast<std::size_t>(k) * n);
    }
    return out;
}

}  // namespace osp

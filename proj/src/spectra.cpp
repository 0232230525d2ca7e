#include "outerspread/spectra.hpp"

#include <cmath>
#include <stdexcept>

namespace osp {

SymMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    SymMatrix m = SymMatrix::zero(n);
    for (const auto& [u, v] : g.edges()) m.at(u, v) = m.at(v, u) = 1.0;
    return m;
}

std::vector<double> adjacency_multiply(const Graph& g, const std::vector<double>& v) {
    const int n = g.vertex_count();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("adjacency_multiply: size mismatch");
    std::vector<double> out(n, 0.0);
    for (const auto& [a, b] : g.edges()) {
        out[a] += v[b];
        out[b] += v[a];
    }
    return out;
}

SpreadResult spread(const Graph& g, double tol) {
    const EigenSystem es = eig_symmetric(adjacency_matrix(g), tol, false);
    if (es.values.empty()) throw std::invalid_argument("spread: empty graph");
    return {es.values.front(), es.values.back(), es.values.front() - es.values.back()};
}

double rayleigh(const SymMatrix& m, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != m.n) throw std::invalid_argument("rayleigh: size mismatch");
    double nrm = 0.0, quad = 0.0;
    for (int i = 0; i < m.n; ++i) {
        nrm += v[i] * v[i];
        double row = 0.0;
        for (int j = 0; j < m.n; ++j) row += m.at(i, j) * v[j];
        quad += v[i] * row;
    }
    if (nrm == 0.0) throw std::invalid_argument("rayleigh: zero vector");
    return quad / nrm;
}

double rayleigh(const Graph& g, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != g.vertex_count()) throw std::invalid_argument("rayleigh: size mismatch");
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    if (nrm == 0.0) throw std::invalid_argument("rayleigh: zero vector");
    double quad = 0.0;
    for (const auto& [a, b] : g.edges()) quad += 2.0 * v[a] * v[b];
    return quad / nrm;
}

ExtremalPairs extremal_pairs(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("extremal_pairs: graph must be connected");
    const int n = g.vertex_count();
    // Tight internal tolerance leaves room for the max-entry rescaling below to
    // stay within the 1e-9 residual contract.
    const EigenSystem es = eig_symmetric(adjacency_matrix(g), 1e-12, true);

    ExtremalPairs out;
    out.lambda1 = es.values.front();
    out.lambda_n = es.values.back();
    out.x.assign(es.vector(0), es.vector(0) + n);
    out.z.assign(es.vector(n - 1), es.vector(n - 1) + n);

    int imax = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(out.x[i]) > std::abs(out.x[imax])) imax = i;
    const double xscale = out.x[imax];
    for (double& v : out.x) v /= xscale;
    out.w = 0;
    for (int i = 1; i < n; ++i)
        if (out.x[i] > out.x[out.w]) out.w = i;
    for (double v : out.x)
        if (!(v > 0.0)) throw std::logic_error("extremal_pairs: top eigenvector not strictly positive");

    out.w_abs = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(out.z[i]) > std::abs(out.z[out.w_abs])) out.w_abs = i;
    const double zscale = std::abs(out.z[out.w_abs]);
    for (double& v : out.z) v /= zscale;
    const double anchor = (out.z[out.w] != 0.0) ? out.z[out.w] : out.z[out.w_abs];
    if (anchor < 0.0)
        for (double& v : out.z) v = -v;

    for (int pass = 0; pass < 2; ++pass) {
        const std::vector<double>& y = pass == 0 ? out.x : out.z;
        const double lam = pass == 0 ? out.lambda1 : out.lambda_n;
        const std::vector<double> ay = adjacency_multiply(g, y);
        for (int i = 0; i < n; ++i)
            if (std::abs(ay[i] - lam * y[i]) > 1e-9)
                throw std::runtime_error("extremal_pairs: eigenpair residual above 1e-9");
    }
    return out;
}

double fan_spread_lower_bound(int n) {
    if (n < 2) throw std::invalid_argument("fan_spread_lower_bound: need n >= 2");
    const Graph f = fan(n);
    const double root = std::sqrt(static_cast<double>(n));
    std::vector<double> v1(n, 1.0), v2(n, 1.0);
    v1[0] = -1.0 + root;
    v2[0] = -1.0 - root;
    const double bound = rayleigh(f, v1) - rayleigh(f, v2);
    // closed form: 2*sqrt(n) - 2/(sqrt(n)*(n-1)), which clears 2*sqrt(n) - 1/n
    // exactly when sqrt(n) >= 1 + sqrt(2), i.e. n >= 6
    const double exact = 2.0 * root - 2.0 / (root * (n - 1));
    if (std::abs(bound - exact) > 1e-9 * n)
        throw std::logic_error("fan_spread_lower_bound: closed form mismatch");
    if (n >= 6 && bound < 2.0 * root - 1.0 / n - 1e-12)
        throw std::logic_error("fan_spread_lower_bound: floor violated");
    return bound;
}

}  // namespace osp

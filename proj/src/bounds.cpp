#include "outerspread/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "outerspread/outerplanar.hpp"

namespace osp {

std::vector<LemmaCheck> bound_suite(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || !g.is_connected()) throw std::invalid_argument("bound_suite: graph must be connected");
    if (!is_outerplanar(g)) throw std::invalid_argument("bound_suite: graph must be outerplanar");

    const SpreadResult s = spread(g);
    const double abs_ln = std::abs(s.lambda_n);
    const double up1 = std::sqrt(static_cast<double>(n)) + 1.0;
    const double base = std::sqrt(static_cast<double>(n - 1));

    auto make = [](std::string name, double lhs, double rhs) {
        LemmaCheck c;
        c.name = std::move(name);
        c.lhs = lhs;
        c.rhs = rhs;
        c.margin = rhs - lhs;
        c.holds = c.margin >= -1e-9;
        return c;
    };

    std::vector<LemmaCheck> out;
    out.push_back(make("lambda1_upper", s.lambda1, up1));
    out.push_back(make("lambda_n_abs_upper", abs_ln, base + 2.0));
    out.push_back(make("lambda_n_abs_lower_extremal", base - 2.0, abs_ln));
    out.push_back(make("lambda1_lower_extremal", base - 2.0, s.lambda1));
    return out;
}

namespace {

int find_hub(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        if (g.degree(u) == n - 1) return u;
    return -1;
}

}  // namespace

EntryResidualStats entry_estimate_residual(const Graph& g) {
    return entry_estimate_residual(g, extremal_pairs(g));
}

EntryResidualStats entry_estimate_residual(const Graph& g, const ExtremalPairs& p) {
    const int n = g.vertex_count();
    if (n < 10) throw std::invalid_argument("entry_estimate_residual: need n >= 10");
    const int hub = find_hub(g);
    if (hub < 0) throw std::invalid_argument("entry_estimate_residual: no vertex of degree n-1");
    if (p.w != hub) throw std::logic_error("entry_estimate_residual: top eigenvector peaks off the hub");

    EntryResidualStats st;
    for (int u = 0; u < n; ++u) {
        if (u == hub) continue;
        const double d = g.degree(u);
        const double ez = 1.0 / p.lambda_n + (d - 1.0) / (p.lambda_n * p.lambda_n);
        const double ex = 1.0 / p.lambda1 + (d - 1.0) / (p.lambda1 * p.lambda1);
        st.max_res_z = std::max(st.max_res_z, std::abs(p.z[u] - ez));
        st.max_res_x = std::max(st.max_res_x, std::abs(p.x[u] - ex));
    }
    return st;
}

RefinedPrediction refined_eigenvalue_prediction(int n, int m) {
    if (n < 2) throw std::invalid_argument("refined_eigenvalue_prediction: need n >= 2");
    if (m < 0 || m > n - 2)
        throw std::invalid_argument("refined_eigenvalue_prediction: m must fit a forest on n-1 vertices");
    const double base = std::sqrt(static_cast<double>(n - 1));
    const double shift = static_cast<double>(m) / (n - 1);
    return {base + shift, -base + shift};
}

DegreeSlackStats degree_bound_diagnostic(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || !g.is_connected())
        throw std::invalid_argument("degree_bound_diagnostic: graph must be connected");
    const ExtremalPairs p = extremal_pairs(g);
    const double root = std::sqrt(static_cast<double>(n));
    DegreeSlackStats st;
    st.min_slack_x = st.min_slack_z = std::numeric_limits<double>::infinity();
    for (int u = 0; u < n; ++u) {
        const double d = g.degree(u);
        st.min_slack_x = std::min(st.min_slack_x, (d - p.x[u] * n) / root);
        st.min_slack_z = std::min(st.min_slack_z, (d - std::abs(p.z[u]) * n) / root);
    }
    return st;
}

BSetDiagnostic b_set_diagnostic(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || !g.is_connected())
        throw std::invalid_argument("b_set_diagnostic: graph must be connected");
    const ExtremalPairs p = extremal_pairs(g);
    BSetDiagnostic d;
    for (int u = 0; u < n; ++u) {
        if (u == p.w || g.has_edge(u, p.w)) continue;
        d.b.push_back(u);
        d.sum_abs_z += std::abs(p.z[u]);
        d.sum_x += p.x[u];
    }
    return d;
}

AlterationResult star_reattach(const Graph& g, int t) {
    const int n = g.vertex_count();
    if (t < 0 || t >= n) throw std::invalid_argument("star_reattach: vertex out of range");
    if (!g.is_connected()) throw std::invalid_argument("star_reattach: graph must be connected");

    const ExtremalPairs p = extremal_pairs(g);
    if (t == p.w) throw std::invalid_argument("star_reattach: t is the anchor vertex");
    if (g.has_edge(t, p.w)) throw std::invalid_argument("star_reattach: t already adjacent to the anchor");

    double sum_x = 0.0, sum_z = 0.0;
    AlterationResult r;
    r.g_star = g;
    for (int v : g.neighbors(t)) {
        sum_x += p.x[v];
        sum_z += p.z[v];
        r.g_star.remove_edge(t, v);
    }
    r.g_star.add_edge(t, p.w);

    double xx = 0.0, zz = 0.0;
    for (int u = 0; u < n; ++u) {
        xx += p.x[u] * p.x[u];
        zz += p.z[u] * p.z[u];
    }
    // x_w = 1 and z_w >= 0 under the extremal_pairs normalization, so both
    // terms are Rayleigh-certified lower bounds on the eigenvalue moves
    r.predicted_delta = (2.0 * p.x[t] / xx) * (1.0 - sum_x) +
                        (2.0 * std::abs(p.z[t]) / zz) * (p.z[p.w] - std::abs(sum_z));
    r.actual_delta = spread(r.g_star).spread - spread(g).spread;
    return r;
}

}  // namespace osp

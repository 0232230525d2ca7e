#include "outerspread/random_graphs.hpp"

#include <algorithm>
#include <stdexcept>

#include "outerspread/outerplanar.hpp"

namespace osp {

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    // rejection keeps it exactly uniform
    const std::uint64_t limit = (~0ULL / span) * span;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
}

double Rng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    return perm;
}

Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) g.add_edge(u, v);
    return g;
}

Graph random_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.uniform_int(0, v - 1));
    return g;
}

Graph random_connected_outerplanar(int n, Rng& rng, int extra_attempts) {
    Graph g = random_tree(n, rng);
    if (extra_attempts <= 0) extra_attempts = 3 * n;
    for (int it = 0; it < extra_attempts && g.edge_count() < 2 * n - 3; ++it) {
        const int u = rng.uniform_int(0, n - 1);
        const int v = rng.uniform_int(0, n - 1);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        if (!is_outerplanar(g)) g.remove_edge(u, v);
    }
    return g;
}

LinearForestSpec random_forest_spec(int total, Rng& rng) {
    if (total < 1) throw std::invalid_argument("random_forest_spec: need total >= 1");
    std::vector<int> parts;
    int rem = total;
    while (rem > 0) {
        const int p = rng.uniform_int(1, rem);
        parts.push_back(p);
        rem -= p;
    }
    std::sort(parts.rbegin(), parts.rend());
    return LinearForestSpec{parts};
}

}  // namespace osp

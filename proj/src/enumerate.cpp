#include "outerspread/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "outerspread/canonical.hpp"
#include "outerspread/outerplanar.hpp"

namespace osp {

namespace {

// cheap positive minor detectors used to discard children before the full
// outerplanarity check
bool has_4clique(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d)) return true;
            }
        }
    return false;
}

bool has_k23_subgraph(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w : g.neighbors(u))
                if (w != v && g.has_edge(v, w)) ++common;
            if (common >= 3) return true;
        }
    return false;
}

}  // namespace

std::vector<EnumeratedGraph> enumerate_outerplanar(int n, bool connected_only) {
    if (n < 1 || n > 11) throw std::invalid_argument("enumerate_outerplanar: need 1 <= n <= 11");

    std::vector<EnumeratedGraph> all;
    std::map<std::string, Graph> level;
    const Graph empty(n);
    level.emplace(canonical_form(empty), empty);
    const int max_edges = std::max(0, 2 * n - 3);

    for (int m = 0; m <= max_edges && !level.empty(); ++m) {
        std::map<std::string, Graph> next;
        for (const auto& [canon, g] : level) {
            all.push_back({canon, g});
            if (m == max_edges) continue;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    Graph child = g;
                    child.add_edge(u, v);
                    if (has_4clique(child) || has_k23_subgraph(child)) continue;
                    std::string child_canon = canonical_form(child);
                    if (next.count(child_canon)) continue;
                    if (!is_outerplanar(child)) continue;
                    next.emplace(std::move(child_canon), std::move(child));
                }
        }
        level.swap(next);
    }

    if (connected_only) {
        std::vector<EnumeratedGraph> kept;
        for (auto& item : all)
            if (item.graph.is_connected()) kept.push_back(std::move(item));
        all.swap(kept);
    }
    std::sort(all.begin(), all.end(),
              [](const EnumeratedGraph& a, const EnumeratedGraph& b) { return a.canon < b.canon; });
    return all;
}

}  // namespace osp

#include "outerspread/minor.hpp"

#include <algorithm>
#include <stdexcept>

#include "outerspread/outerplanar.hpp"

namespace osp {

namespace {

// First K4 subgraph as four vertices, lexicographically smallest.
std::optional<std::vector<int>> k4_pattern(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d))
                        return std::vector<int>{a, b, c, d};
            }
        }
    return std::nullopt;
}

// First pair with three common neighbors: {u, v, a, b, c}.
std::optional<std::vector<int>> k23_pattern(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> common;
            for (int w : g.neighbors(u))
                if (w != v && g.has_edge(v, w)) common.push_back(w);
            if (common.size() >= 3) return std::vector<int>{u, v, common[0], common[1], common[2]};
        }
    return std::nullopt;
}

Graph contract_edge(const Graph& g, int u, int v) {
    // v merges into u; vertices above v shift down by one
    const int n = g.vertex_count();
    Graph h(n - 1);
    auto remap = [&](int x) { return x < v ? x : x - 1; };
    for (const auto& [a, b] : g.edges()) {
        const int a2 = (a == v) ? u : a;
        const int b2 = (b == v) ? u : b;
        if (a2 == b2) continue;
        if (!h.has_edge(remap(a2), remap(b2))) h.add_edge(remap(a2), remap(b2));
    }
    return h;
}

}  // namespace

bool validate_witness(const Graph& g, const MinorWitness& w) {
    const std::size_t parts = (w.target == MinorTarget::K4) ? 4 : 5;
    if (w.branch_sets.size() != parts) return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& set : w.branch_sets) {
        if (set.empty()) return false;
        for (int v : set) {
            if (v < 0 || v >= g.vertex_count() || used[v]) return false;
            used[v] = 1;
        }
        if (!g.induced(set).is_connected()) return false;
    }
    auto touching = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (g.has_edge(x, y)) return true;
        return false;
    };
    if (w.target == MinorTarget::K4) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!touching(w.branch_sets[i], w.branch_sets[j])) return false;
    } else {
        for (int i = 0; i < 2; ++i)
            for (int j = 2; j < 5; ++j)
                if (!touching(w.branch_sets[i], w.branch_sets[j])) return false;
    }
    return true;
}

std::optional<MinorWitness> find_minor(const Graph& g, MinorTarget target) {
    const auto oracle = (target == MinorTarget::K4) ? has_k4_minor : has_k23_minor;
    if (!oracle(g)) return std::nullopt;

    Graph cur = g;
    std::vector<std::vector<int>> classes(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) classes[v] = {v};

    while (true) {
        const auto pattern = (target == MinorTarget::K4) ? k4_pattern(cur) : k23_pattern(cur);
        if (pattern) {
            MinorWitness w;
            w.target = target;
            for (int v : *pattern) w.branch_sets.push_back(classes[v]);
            if (!validate_witness(g, w)) throw std::logic_error("find_minor: built an invalid witness");
            return w;
        }
        bool advanced = false;
        for (const auto& [u, v] : cur.edges()) {
            const Graph next = contract_edge(cur, u, v);
            if (oracle(next)) {
                classes[u].insert(classes[u].end(), classes[v].begin(), classes[v].end());
                std::sort(classes[u].begin(), classes[u].end());
                classes.erase(classes.begin() + v);
                cur = next;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("find_minor: no contraction preserves the minor");
    }
}

}  // namespace osp

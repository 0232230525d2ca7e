#include "outerspread/graph.hpp"

#include <bit>
#include <stdexcept>

namespace osp {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("Graph: vertex count out of range [0, 4096]");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("Graph: vertex index out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: no self loops");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

int Graph::degree(int u) const {
    check_vertex(u);
    int d = 0;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (const std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

std::vector<int> Graph::neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<std::uint64_t> seen(words_, 0), frontier(words_, 0);
    seen[0] = frontier[0] = 1;
    int count = 1;
    while (true) {
        std::vector<std::uint64_t> next(words_, 0);
        bool any = false;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = frontier[w];
            while (bits) {
                const int u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* r = row(u);
                for (int k = 0; k < words_; ++k) {
                    const std::uint64_t fresh = r[k] & ~seen[k];
                    if (fresh) {
                        next[k] |= fresh;
                        seen[k] |= fresh;
                        count += std::popcount(fresh);
                        any = true;
                    }
                }
            }
        }
        if (!any) break;
        frontier.swap(next);
    }
    return count == n_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<char> hit(n_, 0);
    for (int p : perm) {
        if (p < 0 || p >= n_ || hit[p]) throw std::invalid_argument("relabeled: not a permutation");
        hit[p] = 1;
    }
    Graph g(n_);
    for (const auto& [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

Graph path(int k) {
    if (k < 1) throw std::invalid_argument("path: need k >= 1");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
    Graph g = path(k);
    g.add_edge(k - 1, 0);
    return g;
}

Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star: need k >= 1");
    Graph g(k);
    for (int i = 1; i < k; ++i) g.add_edge(0, i);
    return g;
}

Graph complete(int k) {
    if (k < 1) throw std::invalid_argument("complete: need k >= 1");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.vertex_count(), nb = b.vertex_count();
    if (na + nb > Graph::max_vertices) throw std::invalid_argument("join: result too large");
    Graph g(na + nb);
    for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) g.add_edge(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
    return g;
}

LinearForestSpec::LinearForestSpec(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("LinearForestSpec: no parts");
    long long total = 0;
    for (int x : parts) {
        if (x < 1) throw std::invalid_argument("LinearForestSpec: parts must be >= 1");
        total += x;
    }
    if (total > Graph::max_vertices) throw std::invalid_argument("LinearForestSpec: too many vertices");
}

int LinearForestSpec::total_vertices() const {
    int t = 0;
    for (int x : parts) t += x;
    return t;
}

int LinearForestSpec::total_edges() const {
    int t = 0;
    for (int x : parts) t += x - 1;
    return t;
}

std::string LinearForestSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts[i]);
    }
    return s;
}

Graph linear_forest(const LinearForestSpec& spec) {
    Graph g(spec.total_vertices());
    int base = 0;
    for (int part : spec.parts) {
        for (int i = 0; i + 1 < part; ++i) g.add_edge(base + i, base + i + 1);
        base += part;
    }
    return g;
}

Graph fan(int n) {
    if (n < 2) throw std::invalid_argument("fan: need n >= 2");
    return join(complete(1), path(n - 1));
}

Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel: need n >= 4");
    return join(complete(1), cycle(n - 1));
}

}  // namespace osp

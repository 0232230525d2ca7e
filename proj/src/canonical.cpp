#include "outerspread/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>

#include "outerspread/graph6.hpp"

namespace osp {

namespace {

// Branch and bound over vertex orders for the lexicographically least packed
// upper-triangle bitstring.  Placing position k fixes the k bits of column k
// (adjacency to the prefix), so orders are compared bit by bit as they grow
// and a branch dies as soon as its prefix exceeds the incumbent.
class MinCodeSearch {
public:
    explicit MinCodeSearch(const Graph& g) : g_(g), n_(g.vertex_count()), words_(g.words_per_row()) {}

    std::vector<int> run() {
        std::vector<int> perm(n_);
        if (n_ == 0) return perm;
        order_.assign(n_, -1);
        used_.assign(n_, 0);
        bits_.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
        dfs(0);
        for (int pos = 0; pos < n_; ++pos) perm[best_order_[pos]] = pos;
        return perm;
    }

private:
    struct Cand {
        std::vector<std::uint8_t> col;
        int v;
    };

    void dfs(int k) {
        if (have_best_ && !bits_.empty() &&
            std::memcmp(bits_.data(), best_bits_.data(), bits_.size()) > 0)
            return;
        if (k == n_) {
            if (!have_best_ || std::memcmp(bits_.data(), best_bits_.data(), bits_.size()) < 0) {
                best_bits_ = bits_;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }

        std::vector<Cand> cands;
        cands.reserve(n_ - k);
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            Cand c;
            c.v = v;
            c.col.resize(k);
            const std::uint64_t* row = g_.row(v);
            for (int u = 0; u < k; ++u) {
                const int w = order_[u];
                c.col[u] = static_cast<std::uint8_t>((row[w / 64] >> (w % 64)) & 1);
            }
            cands.push_back(std::move(c));
        }
        // smallest column first so the first leaf is already a strong incumbent
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.col != b.col) return a.col < b.col;
            return a.v < b.v;
        });

        std::vector<int> seen;
        for (const Cand& c : cands) {
            bool redundant = false;
            for (std::size_t j = 0; j < seen.size() && !redundant; ++j)
                redundant = swap_automorphic(seen[j], c.v);
            seen.push_back(c.v);
            if (redundant) continue;
            order_[k] = c.v;
            used_[c.v] = 1;
            bits_.insert(bits_.end(), c.col.begin(), c.col.end());
            dfs(k + 1);
            bits_.resize(bits_.size() - k);
            used_[c.v] = 0;
            order_[k] = -1;
        }
    }

    // True when exchanging u and v (fixing everything else) is an automorphism,
    // i.e. their rows agree once the u/v bits are cleared.
    bool swap_automorphic(int u, int v) const {
        const std::uint64_t* ru = g_.row(u);
        const std::uint64_t* rv = g_.row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t a = ru[w], b = rv[w];
            if (u / 64 == w) {
                a &= ~(std::uint64_t{1} << (u % 64));
                b &= ~(std::uint64_t{1} << (u % 64));
            }
            if (v / 64 == w) {
                a &= ~(std::uint64_t{1} << (v % 64));
                b &= ~(std::uint64_t{1} << (v % 64));
            }
            if (a != b) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    int words_;
    std::vector<int> order_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint8_t> bits_;
    bool have_best_ = false;
    std::vector<std::uint8_t> best_bits_;
    std::vector<int> best_order_;
};

}  // namespace

std::vector<int> canonical_relabeling(const Graph& g) { return MinCodeSearch(g).run(); }

std::string canonical_form(const Graph& g) { return graph6_encode(g.relabeled(canonical_relabeling(g))); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace osp

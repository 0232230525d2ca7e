#include "outerspread/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <mutex>
#include <stdexcept>

#include "outerspread/canonical.hpp"
#include "outerspread/enumerate.hpp"
#include "outerspread/fan_secular.hpp"
#include "outerspread/outerplanar.hpp"
#include "outerspread/parallel.hpp"
#include "outerspread/random_graphs.hpp"
#include "outerspread/spectra.hpp"

namespace osp {

FanShape classify_fan_shape(const Graph& g) {
    const int n = g.vertex_count();
    FanShape shape;
    for (int u = 0; u < n; ++u)
        if (g.degree(u) == n - 1) {
            shape.hub = u;
            break;
        }
    if (shape.hub < 0) return shape;
    if (n == 1) {
        shape.is_fan = true;
        return shape;
    }

    std::vector<int> rest;
    for (int u = 0; u < n; ++u)
        if (u != shape.hub) rest.push_back(u);
    const Graph f = g.induced(rest);

    const int k = f.vertex_count();
    long long edges = 0;
    for (int u = 0; u < k; ++u) {
        if (f.degree(u) > 2) return shape;
        edges += f.degree(u);
    }
    edges /= 2;

    // acyclic check plus component sizes in one sweep
    std::vector<int> comp(k, -1);
    int comps = 0;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        int size = 0;
        std::vector<int> stack{s};
        comp[s] = comps;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            ++size;
            for (int v : f.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = comps;
                    stack.push_back(v);
                }
        }
        shape.parts.push_back(size);
        ++comps;
    }
    if (edges != k - comps) {
        shape.parts.clear();
        return shape;
    }
    std::sort(shape.parts.rbegin(), shape.parts.rend());
    shape.is_fan = true;
    return shape;
}

SearchResult exhaustive_max_spread(int n, int workers) {
    if (n < 2 || n > 11) throw std::invalid_argument("exhaustive_max_spread: need 2 <= n <= 11");
    const std::vector<EnumeratedGraph> all = enumerate_outerplanar(n, true);
    if (all.empty()) throw std::logic_error("exhaustive_max_spread: empty enumeration");

    std::vector<double> spreads(all.size());
    parallel_for(static_cast<long long>(all.size()), workers,
                 [&](long long i) { spreads[i] = spread(all[i].graph).spread; });

    double top = spreads[0];
    for (double s : spreads) top = std::max(top, s);

    SearchResult r;
    std::size_t best_idx = all.size();
    double runner = -1.0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (top - spreads[i] <= 1e-9) {
            if (best_idx == all.size()) best_idx = i;  // canon order: first tie wins
            r.ties.push_back(all[i].canon);
        } else {
            runner = std::max(runner, spreads[i]);
        }
    }
    r.best = all[best_idx].graph;
    r.best_spread = spreads[best_idx];
    r.runner_up_gap = runner < 0.0 ? 0.0 : r.best_spread - runner;
    return r;
}

namespace {

// partition kept as one byte per part, descending; lex order on the bytes is
// the tie-break order
struct ScanRow {
    double spread = 0.0;
    std::string parts;
};

bool row_better(const ScanRow& a, const ScanRow& b) {
    if (a.spread != b.spread) return a.spread > b.spread;
    return a.parts < b.parts;
}

// keeps the row_better-top `limit` rows; heap front is the worst kept
struct BoundedRows {
    std::size_t limit;
    std::vector<ScanRow> heap;

    explicit BoundedRows(std::size_t lim) : limit(lim) {}

    bool would_keep(double spread) const {
        return heap.size() < limit || spread >= heap.front().spread;
    }

    void offer(ScanRow&& row) {
        if (limit == 0) return;
        if (heap.size() < limit) {
            heap.push_back(std::move(row));
            std::push_heap(heap.begin(), heap.end(), row_better);
            return;
        }
        if (!row_better(row, heap.front())) return;
        std::pop_heap(heap.begin(), heap.end(), row_better);
        heap.back() = std::move(row);
        std::push_heap(heap.begin(), heap.end(), row_better);
    }

    void merge_into(BoundedRows& other) {
        for (ScanRow& r : heap) other.offer(std::move(r));
        heap.clear();
    }
};

template <typename Visit>
void gen_partitions(int rem, int maxp, std::vector<int>& parts, const Visit& visit) {
    if (rem == 0) {
        visit(parts);
        return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
        parts.push_back(p);
        gen_partitions(rem - p, p, parts, visit);
        parts.pop_back();
    }
}

std::string pack_parts(const std::vector<int>& parts) {
    std::string s;
    s.reserve(parts.size());
    for (int p : parts) s.push_back(static_cast<char>(p));
    return s;
}

std::vector<int> unpack_parts(const std::string& s) {
    std::vector<int> parts;
    parts.reserve(s.size());
    for (char c : s) parts.push_back(static_cast<int>(c));
    return parts;
}

}  // namespace

FanScanResult fan_family_max(int n, int workers, std::size_t table_limit) {
    if (n < 2) throw std::invalid_argument("fan_family_max: need n >= 2");
    if (n > 81) throw std::invalid_argument("fan_family_max: exact partition scan supports n <= 81");
    const int total = n - 1;
    const FanPoleTable table = build_fan_pole_table(total);
    if (table_limit == 0) table_limit = static_cast<std::size_t>(-1);

    // one chunk per largest-part value; chunk results merge in a fixed order
    // and the kept-rows set is unique under the total order, so output does
    // not depend on the worker count
    std::vector<ScanRow> chunk_best(total);
    BoundedRows kept(table_limit);
    std::mutex kept_mutex;

    parallel_for(total, workers, [&](long long chunk) {
        const int first = total - static_cast<int>(chunk);
        BoundedRows local(table_limit);
        ScanRow best;
        best.spread = -1.0;
        std::vector<int> parts{first};
        gen_partitions(total - first, first, parts, [&](const std::vector<int>& p) {
            const FanExtremes e = fan_extremes_tabulated(table, p.data(), static_cast<int>(p.size()));
            const double s = e.lambda1 - e.lambda_n;
            if (best.spread < 0.0 || s > best.spread ||
                (s == best.spread && pack_parts(p) < best.parts))
                best = {s, pack_parts(p)};
            if (local.would_keep(s)) local.offer({s, pack_parts(p)});
        });
        chunk_best[chunk] = std::move(best);
        std::lock_guard<std::mutex> lock(kept_mutex);
        local.merge_into(kept);
    });

    ScanRow best = chunk_best[0];
    for (std::size_t c = 1; c < chunk_best.size(); ++c)
        if (row_better(chunk_best[c], best)) best = chunk_best[c];

    std::vector<ScanRow> rows = std::move(kept.heap);
    std::sort(rows.begin(), rows.end(), row_better);

    FanScanResult result{LinearForestSpec(unpack_parts(best.parts)), best.spread, Table{}};
    result.full_table.columns = {"spec", "n", "forest_edges", "spread", "lambda1", "lambda_n"};
    for (const ScanRow& r : rows) {
        const std::vector<int> parts = unpack_parts(r.parts);
        const LinearForestSpec spec(parts);
        const FanExtremes e = fan_extremes_tabulated(table, parts.data(), static_cast<int>(parts.size()));
        result.full_table.add_row({Value::text(spec.to_string()), Value::integer(n),
                                   Value::integer(spec.total_edges()), Value::real(e.lambda1 - e.lambda_n),
                                   Value::real(e.lambda1), Value::real(e.lambda_n)});
    }
    return result;
}

namespace {

struct Move {
    enum class Kind { Add, Remove, Reattach } kind;
    int u = 0;
    int v = 0;
};

}  // namespace

SearchResult local_search(const Graph& g0, long long budget, std::uint64_t seed) {
    if (!g0.is_connected()) throw std::invalid_argument("local_search: start graph must be connected");
    if (!is_outerplanar(g0)) throw std::invalid_argument("local_search: start graph must be outerplanar");

    const int n = g0.vertex_count();
    Graph cur = g0;
    double cur_spread = spread(cur).spread;
    Rng rng(seed);

    for (long long step = 0; step < budget; ++step) {
        std::vector<Move> moves;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                moves.push_back({cur.has_edge(u, v) ? Move::Kind::Remove : Move::Kind::Add, u, v});
        int w = -1;
        if (n >= 3) {
            w = extremal_pairs(cur).w;
            for (int t = 0; t < n; ++t)
                if (t != w && !cur.has_edge(t, w)) moves.push_back({Move::Kind::Reattach, t, w});
        }
        for (std::size_t i = moves.size(); i > 1; --i)
            std::swap(moves[i - 1], moves[rng.uniform_int(0, static_cast<int>(i) - 1)]);

        bool improved = false;
        for (const Move& m : moves) {
            Graph next = cur;
            if (m.kind == Move::Kind::Add) {
                next.add_edge(m.u, m.v);
                if (!is_outerplanar(next)) continue;
            } else if (m.kind == Move::Kind::Remove) {
                next.remove_edge(m.u, m.v);
                if (!next.is_connected()) continue;
            } else {
                for (int x : cur.neighbors(m.u)) next.remove_edge(m.u, x);
                next.add_edge(m.u, m.v);
                if (!next.is_connected()) continue;
            }
            const double s = spread(next).spread;
            if (s > cur_spread + 1e-9) {
                cur = std::move(next);
                cur_spread = s;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }

    SearchResult r;
    r.best = cur;
    r.best_spread = cur_spread;
    r.runner_up_gap = 0.0;
    r.ties.push_back(canonical_form(cur));
    return r;
}

Table conjecture_scan(int n_lo, int n_hi, int workers) {
    if (n_lo < 2) throw std::invalid_argument("conjecture_scan: need n_lo >= 2");
    Table t;
    t.columns = {"n",        "fan_spread",     "lower_bound",     "lower_bound_margin",
                 "scan_best", "scan_gap",       "exhaustive_best", "exhaustive_gap",
                 "exhaustive_is_fan_path"};
    for (int n = n_lo; n <= n_hi; ++n) {
        const double fan_spread = fan_spread_fast(LinearForestSpec({n - 1}));
        const double lb = fan_spread_lower_bound(n);
        const FanScanResult scan = fan_family_max(n, workers);

        Value ex_best = Value::none(), ex_gap = Value::none(), ex_is_fan = Value::none();
        if (n <= 11) {
            const SearchResult ex = exhaustive_max_spread(n, workers);
            const FanShape shape = classify_fan_shape(ex.best);
            ex_best = Value::text(ex.ties.front());
            ex_gap = Value::real(ex.best_spread - fan_spread);
            ex_is_fan = Value::integer(
                shape.is_fan && shape.parts == std::vector<int>{n - 1} ? 1 : 0);
        }
        t.add_row({Value::integer(n), Value::real(fan_spread), Value::real(lb),
                   Value::real(fan_spread - lb), Value::text(scan.best_spec.to_string()),
                   Value::real(scan.best_spread - fan_spread), ex_best, ex_gap, ex_is_fan});
    }
    return t;
}

}  // namespace osp

#include "outerspread/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace osp {

namespace {

struct EdgeRec {
    int a, b;
    int strands;  // internally disjoint length >= 2 connections represented, capped at 3
};

struct ReduceOutcome {
    bool sp_complete = false;
    bool k4_stuck = false;
    bool k23_found = false;
};

// Series/parallel reduction of one biconnected block given with local vertex
// ids.  Simple invariant: at most one alive edge per vertex pair, so the
// pair-degree equals the adjacency map size.
ReduceOutcome sp_reduce_block(int nv, const std::vector<std::pair<int, int>>& block_edges) {
    ReduceOutcome out;
    std::vector<EdgeRec> edges;
    std::vector<std::map<int, int>> adj(nv);
    for (const auto& [a, b] : block_edges) {
        adj[a][b] = adj[b][a] = static_cast<int>(edges.size());
        edges.push_back({a, b, 0});
    }
    int alive_vertices = nv;
    int alive_edges = static_cast<int>(edges.size());

    std::vector<int> stack;
    for (int v = 0; v < nv; ++v)
        if (adj[v].size() <= 2) stack.push_back(v);
    std::vector<char> dead(nv, 0);

    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (dead[v]) continue;
        const std::size_t d = adj[v].size();
        if (d > 2) continue;
        if (d <= 1) {
            if (alive_vertices <= 2) {
                out.sp_complete = true;
                return out;
            }
            throw std::logic_error("sp_reduce_block: lost 2-connectivity");
        }
        // series: splice v out, the composite strand gains v as an internal
        // vertex.  A side already carrying two strands plus any outside
        // connection (guaranteed by 2-connectivity) completes a K2,3.
        auto it = adj[v].begin();
        const int u = it->first, e1 = it->second;
        ++it;
        const int w = it->first, e2 = it->second;
        if (edges[e1].strands >= 2 || edges[e2].strands >= 2) {
            out.k23_found = true;
            return out;
        }
        adj[u].erase(v);
        adj[w].erase(v);
        adj[v].clear();
        dead[v] = 1;
        --alive_vertices;
        alive_edges -= 2;
        auto hit = adj[u].find(w);
        if (hit != adj[u].end()) {
            EdgeRec& tgt = edges[hit->second];
            tgt.strands = std::min(3, tgt.strands + 1);
            if (tgt.strands >= 3) {
                out.k23_found = true;
                return out;
            }
        } else {
            adj[u][w] = adj[w][u] = static_cast<int>(edges.size());
            edges.push_back({u, w, 1});
            ++alive_edges;
        }
        if (adj[u].size() <= 2) stack.push_back(u);
        if (adj[w].size() <= 2) stack.push_back(w);
    }
    if (alive_edges <= 1)
        out.sp_complete = true;
    else
        out.k4_stuck = true;
    return out;
}

// Max number (capped at `cap`) of internally disjoint u-v paths of length
// >= 2, via unit-capacity flow on the node-split digraph with the direct edge
// arc removed.
int disjoint_long_paths(const Graph& g, int s, int t, int cap) {
    const int n = g.vertex_count();
    // node i -> in 2i, out 2i+1
    struct Arc {
        int to, rev;
        int cap;
    };
    std::vector<std::vector<Arc>> net(2 * n);
    auto add_arc = [&](int from, int to, int c) {
        net[from].push_back({to, static_cast<int>(net[to].size()), c});
        net[to].push_back({from, static_cast<int>(net[from].size()) - 1, 0});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? cap : 1);
    for (const auto& [a, b] : g.edges()) {
        if ((a == s && b == t) || (a == t && b == s)) continue;
        add_arc(2 * a + 1, 2 * b, 1);
        add_arc(2 * b + 1, 2 * a, 1);
    }
    const int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (flow < cap) {
        std::vector<std::pair<int, int>> parent(2 * n, {-1, -1});  // node, arc index
        std::queue<int> q;
        q.push(source);
        parent[source] = {source, -1};
        while (!q.empty() && parent[sink].first < 0) {
            const int at = q.front();
            q.pop();
            for (std::size_t i = 0; i < net[at].size(); ++i) {
                const Arc& arc = net[at][i];
                if (arc.cap > 0 && parent[arc.to].first < 0) {
                    parent[arc.to] = {at, static_cast<int>(i)};
                    q.push(arc.to);
                }
            }
        }
        if (parent[sink].first < 0) break;
        for (int at = sink; at != source;) {
            const auto& [prev, ai] = parent[at];
            net[prev][ai].cap -= 1;
            net[at][net[prev][ai].rev].cap += 1;
            at = prev;
        }
        ++flow;
    }
    return flow;
}

bool k23_by_flow(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 3) continue;
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(v) < 3) continue;
            if (disjoint_long_paths(g, u, v, 3) >= 3) return true;
        }
    }
    return false;
}

struct BlockView {
    std::vector<std::pair<int, int>> local_edges;
    int nv = 0;
    std::vector<int> to_original;
};

BlockView localize(const std::vector<std::pair<int, int>>& block) {
    BlockView view;
    std::map<int, int> local;
    for (const auto& [a, b] : block) {
        for (int v : {a, b})
            if (!local.count(v)) {
                local[v] = view.nv++;
                view.to_original.push_back(v);
            }
        view.local_edges.emplace_back(local[a], local[b]);
    }
    return view;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    struct Frame {
        int v, parent;
        std::vector<int> nbrs;
        std::size_t next;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> dfs;
        dfs.push_back({root, -1, g.neighbors(root), 0});
        disc[root] = low[root] = timer++;
        while (!dfs.empty()) {
            Frame& f = dfs.back();
            if (f.next < f.nbrs.size()) {
                const int to = f.nbrs[f.next++];
                if (disc[to] < 0) {
                    edge_stack.emplace_back(f.v, to);
                    disc[to] = low[to] = timer++;
                    dfs.push_back({to, f.v, g.neighbors(to), 0});
                } else if (to != f.parent && disc[to] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, to);
                    low[f.v] = std::min(low[f.v], disc[to]);
                }
            } else {
                const int v = f.v, parent = f.parent;
                dfs.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        std::vector<std::pair<int, int>> block;
                        while (!edge_stack.empty()) {
                            const auto e = edge_stack.back();
                            if (disc[e.first] < disc[v] && e != std::make_pair(parent, v)) break;
                            edge_stack.pop_back();
                            block.push_back(e);
                            if (e == std::make_pair(parent, v)) break;
                        }
                        out.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return out;
}

bool has_k4_minor(const Graph& g) {
    for (const auto& block : biconnected_components(g)) {
        if (block.size() < 6) continue;  // K4 needs six edges
        const BlockView view = localize(block);
        if (sp_reduce_block(view.nv, view.local_edges).k4_stuck) return true;
    }
    return false;
}

bool has_k23_minor(const Graph& g) {
    for (const auto& block : biconnected_components(g)) {
        if (block.size() < 6) continue;  // K2,3 needs six edges
        const BlockView view = localize(block);
        const ReduceOutcome r = sp_reduce_block(view.nv, view.local_edges);
        if (r.k23_found) return true;
        if (r.k4_stuck) {
            Graph sub(view.nv);
            for (const auto& [a, b] : view.local_edges) sub.add_edge(a, b);
            if (k23_by_flow(sub)) return true;
        }
    }
    return false;
}

bool is_outerplanar(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= 2 && g.edge_count() > 2 * n - 3) return false;
    return !has_k4_minor(g) && !has_k23_minor(g);
}

}  // namespace osp

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace osp {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bitset row
// per vertex.  Hard cap on n keeps accidental O(n^2) blowups bounded; every
// constructor below validates its arguments and throws std::invalid_argument.
class Graph {
public:
    static constexpr int max_vertices = 4096;

    Graph() : n_(0), words_(0) {}
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int u) const;
    std::vector<int> neighbors(int u) const;

    // Word view of one adjacency row, words_per_row() entries.
    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }
    int words_per_row() const { return words_; }

    bool is_connected() const;

    // All edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Graph on the same vertex set with vertex i renamed perm[i].
    Graph relabeled(const std::vector<int>& perm) const;

    // Induced subgraph on the given vertices (kept order defines new labels).
    Graph induced(const std::vector<int>& keep) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void check_vertex(int u) const;
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

Graph path(int k);
Graph cycle(int k);     // k >= 3
Graph star(int k);      // K_{1,k-1}, center 0, k >= 1
Graph complete(int k);

// Disjoint union of a and b plus all edges between them; b's vertices are
// shifted by a.vertex_count().
Graph join(const Graph& a, const Graph& b);

// Vertex-disjoint union of paths, one per entry of parts (each >= 1).
struct LinearForestSpec {
    std::vector<int> parts;

    explicit LinearForestSpec(std::vector<int> p);
    int total_vertices() const;
    int total_edges() const;   // sum of (part - 1)
    std::string to_string() const;  // "5+3+1"
};

Graph linear_forest(const LinearForestSpec& spec);

// K_1 joined with a path on n-1 vertices; hub is vertex 0.
Graph fan(int n);

// K_1 joined with a cycle on n-1 vertices (n >= 4); hub is vertex 0.
Graph wheel(int n);

}  // namespace osp

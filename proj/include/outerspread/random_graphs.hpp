#pragma once

#include <cstdint>
#include <vector>

#include "outerspread/graph.hpp"

namespace osp {

// splitmix64; fixed algorithm so seeded runs reproduce across platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] inclusive
    int uniform_int(int lo, int hi);
    double uniform01();
};

std::vector<int> random_permutation(int n, Rng& rng);

// Erdos-Renyi G(n, p)
Graph random_graph(int n, double p, Rng& rng);

// uniform attachment tree: vertex i >= 1 joins a uniform earlier vertex
Graph random_tree(int n, Rng& rng);

// random attachment tree plus random extra edges kept only when the result
// stays outerplanar; extra_attempts <= 0 means 3n tries
Graph random_connected_outerplanar(int n, Rng& rng, int extra_attempts = 0);

// random partition of total into parts >= 1, sorted descending
LinearForestSpec random_forest_spec(int total, Rng& rng);

}  // namespace osp

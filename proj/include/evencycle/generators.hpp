#pragma once

#include <cstdint>

#include "evencycle/graph.hpp"

namespace evencycle {

// Uniform simple graph with exactly m edges, deterministic in seed.
Graph gen_random(int n, long long m, uint64_t seed);

struct PlantedInstance {
    Graph graph;
    Cycle cycle;
};

// Random graph guaranteed to contain the returned simple 2k-cycle: the cycle
// is planted on 2k random vertices first, the remaining m - 2k edges are
// uniform among the non-cycle pairs.
PlantedInstance gen_planted_cycle(int n, long long m, int k, uint64_t seed);

// Polarity graph of the projective plane over GF(q), q prime: vertices are
// the q^2+q+1 normalized projective points, u ~ v iff the dot product
// vanishes mod q. C_4-free with about n^{3/2}/2 edges; self-orthogonal
// points simply have degree q instead of q+1 and are kept.
Graph gen_c4_free_polarity(int q);

// Greedy high-girth graph: scan a seeded random permutation of all vertex
// pairs, accepting an edge only when the current endpoint distance is at
// least girth_target - 1, so every cycle ever closed has length >=
// girth_target. Density is whatever the greedy pass achieves.
Graph gen_high_girth(int n, int girth_target, uint64_t seed);

}  // namespace evencycle

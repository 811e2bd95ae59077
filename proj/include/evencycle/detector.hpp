#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/rng.hpp"

namespace evencycle {

enum class DetectorMode { randomized, exhaustive };

// Per-vertex 2k-cycle detector configuration. In randomized mode the detector
// runs trials() independent colorings; a colorful cycle survives one uniform
// (2k)-coloring with probability (2k)!/(2k)^{2k} >= e^{-2k}, so
// T = ceil(e^{2k} * ln(1/delta)) trials push the miss probability below delta.
struct DetectorConfig {
    int k = 2;
    double delta = 1e-6;
    uint64_t rng_seed = 0;
    DetectorMode mode = DetectorMode::randomized;

    uint64_t trials() const;
    void validate() const;  // throws std::invalid_argument on bad fields
};

std::vector<int> uniform_coloring(int n, int colors, Rng& rng);

// One color-coding trial: dynamic program over (color subset, vertex) pairs.
// A vertex v is marked for subset S iff some path from u to v uses exactly the
// colors in S, one vertex per color. Returns a 2k-cycle through u whose
// vertices all have distinct colors under `coloring`, if one exists.
// Colors are bitmask bits, so 2k <= 16 is required.
std::optional<Cycle> colorful_path_dp(const Graph& h, int u,
                                      const std::vector<int>& coloring, int k);

// Decide whether u lies on a 2k-cycle of h. Never returns a false positive.
// Misses with probability <= delta in randomized mode, never in exhaustive
// mode (bounded DFS to depth 2k). Pure function of (h, u, cfg).
std::optional<Cycle> detect_cycle_through(const Graph& h, int u,
                                          const DetectorConfig& cfg);

}  // namespace evencycle

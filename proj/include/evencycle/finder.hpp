#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "evencycle/detector.hpp"
#include "evencycle/graph.hpp"

namespace evencycle {

// Outcome of one finder run. edges_touched sums |E| over every capped prefix
// neighborhood actually constructed; it is the machine-independent work
// counter the scaling benchmarks fit against. high_degree_nodes counts
// vertices with deg(v) > m^{2/(k+1)} (diagnostic only, the algorithm does not
// special-case them). found_at_rank is the 1-based order position at which
// the witness appeared, or -1.
struct FinderReport {
    std::optional<Cycle> result;
    uint64_t edges_touched = 0;
    uint64_t detector_invocations = 0;
    std::chrono::nanoseconds wall_time{0};
    int high_degree_nodes = 0;
    int found_at_rank = -1;
};

// Degree-ordered capped-neighborhood search for a 2k-cycle: for each vertex
// v_i in non-decreasing degree order, build the prefix neighborhood around
// v_i capped at BFS depth k, ask the detector for a 2k-cycle through v_i,
// and stop at the first witness (relabeled to input ids). cfg.k is
// overridden by k; cfg.rng_seed fans out to one detector seed per vertex.
FinderReport find_even_cycle(const Graph& g, int k, const DetectorConfig& cfg);

enum class EvenCycleVerdict { yes_with_witness, yes_by_density, no };

struct DecideResult {
    EvenCycleVerdict verdict = EvenCycleVerdict::no;
    FinderReport report;  // zero-work report when decided by density alone
};

// Density shortcut first (m above the guarantee threshold answers yes with
// no witness), otherwise delegate to find_even_cycle.
DecideResult decide_even_cycle(const Graph& g, int k, const DetectorConfig& cfg);

const char* verdict_name(EvenCycleVerdict v);

}  // namespace evencycle

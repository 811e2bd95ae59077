#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evencycle/finder.hpp"
#include "evencycle/graph.hpp"

namespace evencycle {

// One benchmark measurement. wall_time_ns is the median over repetitions;
// the work counters are deterministic and identical across repetitions.
struct BenchRow {
    std::string family;
    int n = 0;
    long long m = 0;
    int k = 0;
    uint64_t seed = 0;
    uint64_t wall_time_ns = 0;
    uint64_t edges_touched = 0;
    uint64_t detector_invocations = 0;
    bool found = false;
};

BenchRow bench_one(const Graph& g, const std::string& family, int k, uint64_t seed,
                   const DetectorConfig& cfg, int repetitions);

// Least-squares slope of ys against xs; callers pass logs. Requires at least
// two distinct xs.
double fit_log_slope(const std::vector<double>& xs, const std::vector<double>& ys);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace evencycle

#include "evencycle/bench.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace evencycle {

BenchRow bench_one(const Graph& g, const std::string& family, int k, uint64_t seed,
                   const DetectorConfig& cfg, int repetitions) {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
    BenchRow row;
    row.family = family;
    row.n = g.n;
    row.m = g.m;
    row.k = k;
    row.seed = seed;

    std::vector<uint64_t> times;
    times.reserve(static_cast<size_t>(repetitions));
    for (int r = 0; r < repetitions; ++r) {
        FinderReport rep = find_even_cycle(g, k, cfg);
        times.push_back(static_cast<uint64_t>(rep.wall_time.count()));
        if (r == 0) {
            row.edges_touched = rep.edges_touched;
            row.detector_invocations = rep.detector_invocations;
            row.found = rep.result.has_value();
        }
    }
    std::sort(times.begin(), times.end());
    row.wall_time_ns = times[times.size() / 2];
    return row;
}

double fit_log_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("need at least two points");
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("xs are all identical");
    return sxy / sxx;
}

std::string bench_csv_header() {
    return "family,n,m,k,seed,wall_time_ns,edges_touched,detector_invocations,found";
}

std::string bench_csv_row(const BenchRow& row) {
    std::ostringstream out;
    out << row.family << ',' << row.n << ',' << row.m << ',' << row.k << ','
        << row.seed << ',' << row.wall_time_ns << ',' << row.edges_touched << ','
        << row.detector_invocations << ',' << (row.found ? 1 : 0);
    return out.str();
}

}  // namespace evencycle

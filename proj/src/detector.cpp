#include "evencycle/detector.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "evencycle/oracle.hpp"

namespace evencycle {

void DetectorConfig::validate() const {
    if (k < 2) throw std::invalid_argument("detector requires k >= 2");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0,1)");
    if (mode == DetectorMode::randomized && 2 * k > 16)
        throw std::invalid_argument("randomized detector supports 2k <= 16 colors");
}

uint64_t DetectorConfig::trials() const {
    double raw = std::ceil(std::exp(2.0 * k) * std::log(1.0 / delta));
    if (!(raw >= 1.0)) return 1;
    if (raw >= 9.0e18) return std::numeric_limits<uint64_t>::max();
    return static_cast<uint64_t>(raw);
}

std::vector<int> uniform_coloring(int n, int colors, Rng& rng) {
    std::vector<int> c(n);
    for (int v = 0; v < n; ++v) c[v] = rng.below_int(colors);
    return c;
}

std::optional<Cycle> colorful_path_dp(const Graph& h, int u,
                                      const std::vector<int>& coloring, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (u < 0 || u >= h.n) throw std::invalid_argument("vertex out of range");
    if (static_cast<int>(coloring.size()) != h.n)
        throw std::invalid_argument("coloring size mismatch");
    const int colors = 2 * k;
    if (colors > 16) throw std::invalid_argument("at most 16 colors supported");
    for (int c : coloring)
        if (c < 0 || c >= colors) throw std::invalid_argument("color out of range");

    const int n = h.n;
    const uint32_t full = (1u << colors) - 1;
    const uint32_t base = 1u << coloring[u];

    // pred[S*n+v] = predecessor of v on a colorful u-v path using color set S,
    // -1 if unreached; the base state points at itself.
    std::vector<int32_t> pred(static_cast<size_t>(full + 1) * n, -1);
    pred[static_cast<size_t>(base) * n + u] = u;

    // Transitions only add bits, so numeric subset order is a valid schedule.
    for (uint32_t S = base; S < full; ++S) {
        if (!(S & base)) continue;
        const size_t row = static_cast<size_t>(S) * n;
        for (int v = 0; v < n; ++v) {
            if (pred[row + v] < 0) continue;
            for (int w : h.adj[v]) {
                uint32_t bit = 1u << coloring[w];
                if (S & bit) continue;
                int32_t& slot = pred[static_cast<size_t>(S | bit) * n + w];
                if (slot < 0) slot = v;
            }
        }
    }

    const size_t full_row = static_cast<size_t>(full) * n;
    for (int v : h.adj[u]) {
        if (pred[full_row + v] < 0) continue;
        std::vector<int> verts(colors);
        uint32_t S = full;
        int x = v;
        for (int pos = colors - 1; pos >= 1; --pos) {
            verts[pos] = x;
            int p = pred[static_cast<size_t>(S) * n + x];
            S &= ~(1u << coloring[x]);
            x = p;
        }
        verts[0] = x;
        Cycle c{verts};
        if (x != u || !validate_cycle(h, c, colors))
            throw std::logic_error("colorful path reconstruction failed");
        return c;
    }
    return std::nullopt;
}

std::optional<Cycle> detect_cycle_through(const Graph& h, int u,
                                          const DetectorConfig& cfg) {
    cfg.validate();
    if (u < 0 || u >= h.n) throw std::invalid_argument("vertex out of range");
    if (cfg.mode == DetectorMode::exhaustive) {
        OracleBudget unlimited;
        unlimited.max_expansions = std::numeric_limits<uint64_t>::max();
        return oracle_cycle_through(h, u, 2 * cfg.k, unlimited);
    }
    if (h.degree(u) < 2) return std::nullopt;
    Rng rng(cfg.rng_seed);
    const uint64_t T = cfg.trials();
    for (uint64_t t = 0; t < T; ++t) {
        auto coloring = uniform_coloring(h.n, 2 * cfg.k, rng);
        if (auto c = colorful_path_dp(h, u, coloring, cfg.k)) return c;
    }
    return std::nullopt;
}

}  // namespace evencycle

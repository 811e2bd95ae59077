#include "evencycle/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace evencycle {

namespace {

struct CycleDfs {
    const Graph& g;
    int L;
    uint64_t budget;
    uint64_t expansions = 0;
    std::vector<int> path;
    std::vector<char> on_path;
    int start = -1;
    bool fixed_start = false;  // cycle-through mode: rotations die with the pinned start

    CycleDfs(const Graph& g, int L, uint64_t budget) : g(g), L(L), budget(budget) {
        on_path.assign(g.n, 0);
        path.reserve(L);
    }

    bool admissible(int w) const {
        // canonical-start mode keeps the start as the path minimum
        return fixed_start ? w != start : w > start;
    }

    bool extend() {
        if (++expansions > budget)
            throw BudgetExceeded("cycle search exceeded " + std::to_string(budget) +
                                 " node expansions");
        int u = path.back();
        if (static_cast<int>(path.size()) == L) {
            // close only in the canonical direction, killing the reflection
            return path[1] < u && g.has_edge(u, start);
        }
        for (int w : g.adj[u]) {
            if (!admissible(w) || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            if (extend()) return true;
            on_path[w] = 0;
            path.pop_back();
        }
        return false;
    }

    std::optional<Cycle> from(int s) {
        start = s;
        path.assign(1, s);
        on_path[s] = 1;
        bool found = extend();
        on_path[s] = 0;
        if (found) return Cycle{path};
        return std::nullopt;
    }
};

}  // namespace

std::optional<Cycle> oracle_has_cycle(const Graph& g, int L, const OracleBudget& budget) {
    if (L < 3) throw std::invalid_argument("cycle length must be at least 3");
    CycleDfs dfs(g, L, budget.max_expansions);
    for (int s = 0; s < g.n; ++s) {
        if (g.degree(s) < 2) continue;
        if (auto c = dfs.from(s)) return c;
    }
    return std::nullopt;
}

std::optional<Cycle> oracle_cycle_through(const Graph& g, int u, int L,
                                          const OracleBudget& budget) {
    if (L < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (u < 0 || u >= g.n) throw std::invalid_argument("vertex out of range");
    CycleDfs dfs(g, L, budget.max_expansions);
    dfs.fixed_start = true;
    return dfs.from(u);
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (auto [u, v] : g.edges) {
        const auto& a = g.adj[u];
        const auto& b = g.adj[v];
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return std::array<int, 3>{u, v, a[i]};
            if (a[i] < b[j])
                ++i;
            else
                ++j;
        }
    }
    return std::nullopt;
}

std::vector<WalkCount> walk_count_vector(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    std::vector<WalkCount> cur(g.n, 1), nxt(g.n);
    for (int step = 0; step < k; ++step) {
        for (int v = 0; v < g.n; ++v) {
            nxt[v] = 0;
            for (int w : g.adj[v]) nxt[v] += cur[w];
        }
        cur.swap(nxt);
    }
    return cur;
}

WalkCount oracle_count_k_walks(const Graph& g, const std::vector<int>& S, int k) {
    auto counts = walk_count_vector(g, k);
    WalkCount total = 0;
    std::vector<char> seen(g.n, 0);
    for (int v : S) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("set member out of range");
        if (seen[v]) throw std::invalid_argument("set member repeated");
        seen[v] = 1;
        total += counts[v];
    }
    return total;
}

double to_double_checked(const WalkCount& x, bool& precision_loss) {
    double d = x.get_d();
    precision_loss = !std::isfinite(d) || WalkCount(d) != x;  // exact iff the round trip is
    return d;
}

}  // namespace evencycle

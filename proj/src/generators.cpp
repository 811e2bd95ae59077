#include "evencycle/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "evencycle/rng.hpp"

namespace evencycle {

namespace {

long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

long long edge_key(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * n + v;
}

// Draw edges uniformly from the pairs not yet in `used` until the graph has
// `target` edges total. Rejection sampling while sparse, full-universe
// partial shuffle once the density makes rejection wasteful.
void fill_uniform(int n, long long target, Rng& rng,
                  std::unordered_set<long long>& used,
                  std::vector<std::pair<int, int>>& edges) {
    const long long universe = pair_count(n);
    if (target > universe) throw std::invalid_argument("more edges than vertex pairs");
    if (2 * target <= universe) {
        while (static_cast<long long>(edges.size()) < target) {
            int u = rng.below_int(n);
            int v = rng.below_int(n);
            if (u == v) continue;
            if (used.insert(edge_key(n, u, v)).second)
                edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        return;
    }
    std::vector<std::pair<int, int>> pool;
    pool.reserve(static_cast<size_t>(universe - edges.size()));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!used.count(edge_key(n, u, v))) pool.emplace_back(u, v);
    rng.shuffle(pool);
    for (size_t i = 0; static_cast<long long>(edges.size()) < target; ++i)
        edges.push_back(pool[i]);
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Graph gen_random(int n, long long m, uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative size");
    if (m > pair_count(n)) throw std::invalid_argument("more edges than vertex pairs");
    Rng rng(seed);
    std::unordered_set<long long> used;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    fill_uniform(n, m, rng, used, edges);
    return Graph::from_edges(n, std::move(edges));
}

PlantedInstance gen_planted_cycle(int n, long long m, int k, uint64_t seed) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const int len = 2 * k;
    if (n < len) throw std::invalid_argument("need at least 2k vertices");
    if (m < len) throw std::invalid_argument("need at least 2k edges");
    if (m > pair_count(n)) throw std::invalid_argument("more edges than vertex pairs");

    Rng rng(seed);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    rng.shuffle(verts);
    verts.resize(len);

    PlantedInstance out;
    out.cycle.vertices = verts;
    std::unordered_set<long long> used;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < len; ++i) {
        int u = verts[i], v = verts[(i + 1) % len];
        used.insert(edge_key(n, u, v));
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    fill_uniform(n, m, rng, used, edges);
    out.graph = Graph::from_edges(n, std::move(edges));
    return out;
}

Graph gen_c4_free_polarity(int q) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    // normalized homogeneous coordinates: (1,a,b), (0,1,b), (0,0,1)
    std::vector<std::array<int, 3>> pts;
    pts.reserve(static_cast<size_t>(q) * q + q + 1);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});

    const int n = static_cast<int>(pts.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            long long dot = 0;
            for (int t = 0; t < 3; ++t)
                dot += static_cast<long long>(pts[i][t]) * pts[j][t];
            if (dot % q == 0) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_high_girth(int n, int girth_target, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative size");
    if (girth_target < 6) throw std::invalid_argument("girth target must be >= 6");
    Rng rng(seed);
    std::vector<std::pair<int, int>> candidates;
    candidates.reserve(static_cast<size_t>(pair_count(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
    rng.shuffle(candidates);

    std::vector<std::vector<int>> adj(n);
    std::vector<int> dist(n), queue;
    const int max_depth = girth_target - 2;  // unreached here means dist >= g0-1
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : candidates) {
        dist.assign(n, -1);
        queue.clear();
        queue.push_back(u);
        dist[u] = 0;
        bool reached = false;
        for (size_t head = 0; head < queue.size() && !reached; ++head) {
            int w = queue[head];
            if (dist[w] == max_depth) break;  // queue is ordered by depth
            for (int z : adj[w]) {
                if (dist[z] >= 0) continue;
                dist[z] = dist[w] + 1;
                if (z == v) {
                    reached = true;
                    break;
                }
                queue.push_back(z);
            }
        }
        if (reached) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace evencycle

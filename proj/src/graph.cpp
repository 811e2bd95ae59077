#include "evencycle/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "evencycle/rng.hpp"

namespace evencycle {

namespace {

uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
}

// strict nonnegative integer token; anything else is malformed
bool parse_uint(const std::string& tok, long long& out) {
    if (tok.empty() || tok.size() > 18) return false;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
    }
    out = std::stoll(tok);
    return true;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex id out of range [0," + std::to_string(n) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].first) + "," +
                                        std::to_string(edges[i].second) + ")");
    }
    g.edges = std::move(edges);
    g.m = static_cast<long long>(g.edges.size());
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int target = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

Graph parse_graph(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<uint64_t> seen;
    long long declared_n = -1, declared_m = -1;
    long long max_id = -1;
    bool content_seen = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t p = line.find_first_not_of(" \t");
        if (p == std::string::npos) continue;
        if (line[p] == '#') continue;

        std::istringstream ls(line);
        std::string t0, t1, t2, extra;
        ls >> t0 >> t1 >> t2;

        if (t0 == "p") {
            if (content_seen) fail(line_no, "header line must precede all edges");
            if (declared_n >= 0) fail(line_no, "duplicate header line");
            long long hn, hm;
            if (t1.empty() || t2.empty() || !parse_uint(t1, hn) || !parse_uint(t2, hm) || (ls >> extra))
                fail(line_no, "malformed header, expected 'p <n> <m>'");
            declared_n = hn;
            declared_m = hm;
            content_seen = true;
            continue;
        }

        long long u, v;
        if (t1.empty() || !parse_uint(t0, u) || !parse_uint(t1, v))
            fail(line_no, "malformed edge line, expected two nonnegative integers");
        if (!t2.empty()) fail(line_no, "trailing token '" + t2 + "' on edge line");
        content_seen = true;
        if (u == v) fail(line_no, "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > INT32_MAX || v > INT32_MAX) fail(line_no, "vertex id too large");
        if (!seen.insert(edge_key(static_cast<int>(u), static_cast<int>(v))).second)
            fail(line_no, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    long long n = max_id + 1;
    if (declared_n >= 0) {
        if (declared_n < max_id + 1)
            throw ParseError("header declares n=" + std::to_string(declared_n) +
                             " but an edge references vertex " + std::to_string(max_id));
        if (declared_m != static_cast<long long>(edges.size()))
            throw ParseError("header declares m=" + std::to_string(declared_m) + " but " +
                             std::to_string(edges.size()) + " edges follow");
        n = declared_n;
    }
    if (n > INT32_MAX) throw ParseError("vertex count too large");
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n << ' ' << g.m << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

DegreeOrder degree_order(const Graph& g) {
    DegreeOrder ord;
    ord.order.resize(g.n);
    std::iota(ord.order.begin(), ord.order.end(), 0);
    std::sort(ord.order.begin(), ord.order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da < db : a < b;
    });
    ord.rank.resize(g.n);
    for (int i = 0; i < g.n; ++i) ord.rank[ord.order[i]] = i;
    return ord;
}

DegreeOrder id_order(const Graph& g) {
    DegreeOrder ord;
    ord.order.resize(g.n);
    ord.rank.resize(g.n);
    std::iota(ord.order.begin(), ord.order.end(), 0);
    std::iota(ord.rank.begin(), ord.rank.end(), 0);
    return ord;
}

DegreeOrder random_order(const Graph& g, uint64_t seed) {
    DegreeOrder ord;
    ord.order.resize(g.n);
    std::iota(ord.order.begin(), ord.order.end(), 0);
    Rng rng(seed);
    rng.shuffle(ord.order);
    ord.rank.resize(g.n);
    for (int i = 0; i < g.n; ++i) ord.rank[ord.order[i]] = i;
    return ord;
}

bool valid_order(const Graph& g, const DegreeOrder& ord) {
    if (static_cast<int>(ord.rank.size()) != g.n || static_cast<int>(ord.order.size()) != g.n)
        return false;
    for (int i = 0; i < g.n; ++i) {
        int v = ord.order[i];
        if (v < 0 || v >= g.n || ord.rank[v] != i) return false;
    }
    return true;
}

bool validate_cycle(const Graph& g, const Cycle& c, int expected_len) {
    int len = c.length();
    if (len < 3) return false;
    if (expected_len >= 0 && len != expected_len) return false;
    std::unordered_set<int> distinct;
    for (int v : c.vertices) {
        if (v < 0 || v >= g.n) return false;
        if (!distinct.insert(v).second) return false;
    }
    for (int i = 0; i < len; ++i) {
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % len])) return false;
    }
    return true;
}

CappedNeighborhoodBuilder::CappedNeighborhoodBuilder(const Graph& g, const DegreeOrder& ord)
    : g_(g), ord_(ord) {
    dist_.assign(g.n, 0);
    dist_epoch_.assign(g.n, -1);
    local_.assign(g.n, 0);
    local_epoch_.assign(g.n, -1);
    queue_.reserve(g.n);
}

Subgraph CappedNeighborhoodBuilder::build(int i, int k) {
    if (i < 1 || i > g_.n) throw std::invalid_argument("vertex position out of range");
    if (k < 1) throw std::invalid_argument("depth cap k must be at least 1");
    ++epoch_;
    const int cap_rank = i - 1;
    const int root = ord_.order[cap_rank];

    // BFS inside the rank-filtered prefix; only distances < k matter.
    queue_.clear();
    queue_.push_back(root);
    dist_[root] = 0;
    dist_epoch_[root] = epoch_;
    for (size_t head = 0; head < queue_.size(); ++head) {
        int u = queue_[head];
        if (dist_[u] >= k - 1) continue;
        for (int w : g_.adj[u]) {
            if (ord_.rank[w] > cap_rank || dist_epoch_[w] == epoch_) continue;
            dist_[w] = dist_[u] + 1;
            dist_epoch_[w] = epoch_;
            queue_.push_back(w);
        }
    }

    Subgraph out;
    auto local_id = [&](int v) {
        if (local_epoch_[v] != epoch_) {
            local_epoch_[v] = epoch_;
            local_[v] = static_cast<int>(out.to_parent.size());
            out.to_parent.push_back(v);
        }
        return local_[v];
    };
    local_id(root);  // local vertex 0 is always the BFS root

    // Every BFS-reached vertex has distance <= k-1, so each of its prefix
    // edges belongs to the result. An edge between two reached vertices is
    // taken once (from its smaller endpoint).
    std::vector<std::pair<int, int>> local_edges;
    for (int u : queue_) {
        for (int w : g_.adj[u]) {
            if (ord_.rank[w] > cap_rank) continue;
            if (dist_epoch_[w] == epoch_ && w < u) continue;
            local_edges.emplace_back(local_id(u), local_id(w));
        }
    }
    out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), std::move(local_edges));
    return out;
}

Subgraph capped_neighborhood(const Graph& g, const DegreeOrder& ord, int i, int k) {
    CappedNeighborhoodBuilder builder(g, ord);
    return builder.build(i, k);
}

double density_threshold(long long n, int k) {
    if (n <= 0) return 0.0;
    double nd = static_cast<double>(n);
    return 100.0 * k * std::pow(nd, 1.0 + 1.0 / k);
}

bool density_shortcut(long long n, long long m, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (n <= 0) return false;
    return static_cast<double>(m) > density_threshold(n, k);
}

bool density_shortcut(const Graph& g, int k) { return density_shortcut(g.n, g.m, k); }

}  // namespace evencycle

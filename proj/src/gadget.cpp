#include "evencycle/gadget.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace evencycle {

TripartiteResult build_tripartite(const Graph& g) {
    const int n = g.n;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(6) * g.edges.size());
    auto a = [n](int u) { return u; };
    auto b = [n](int u) { return n + u; };
    auto c = [n](int u) { return 2 * n + u; };
    for (auto [u, v] : g.edges) {
        edges.emplace_back(a(u), b(v));
        edges.emplace_back(b(u), c(v));
        edges.emplace_back(c(u), a(v));
        edges.emplace_back(a(v), b(u));
        edges.emplace_back(b(v), c(u));
        edges.emplace_back(c(v), a(u));
    }
    TripartiteResult out;
    out.graph = Graph::from_edges(3 * n, std::move(edges));
    out.origins.resize(3 * n);
    for (int u = 0; u < n; ++u) {
        out.origins[a(u)] = {GadgetRole::copy_a, u, -1, -1, 1};
        out.origins[b(u)] = {GadgetRole::copy_b, u, -1, -1, 1};
        out.origins[c(u)] = {GadgetRole::copy_c, u, -1, -1, 1};
    }
    return out;
}

int gadget_subdivision_length(int k) { return (2 * k + 4) / 4; }

int gadget_chain_length(int k) {
    int x = gadget_subdivision_length(k);
    int chain = 2 * k - 3 * x + 1;
    return chain < 1 ? 1 : chain;
}

static void check_gadget_k(int k) {
    if (k < 3 || k == 4)
        throw std::invalid_argument(
            "triangle reduction requires k >= 3 and k != 4 (the subdivision "
            "arithmetic needs 2k >= 3*ceil((2k+1)/4), which fails for k=" +
            std::to_string(k) + ")");
}

GadgetGraph build_gadget(const Graph& g, int k) {
    check_gadget_k(k);
    const int x = gadget_subdivision_length(k);
    const int chain = gadget_chain_length(k);
    const int n = g.n;
    const long long m = g.m;

    GadgetGraph out;
    out.k = k;
    out.x = x;
    out.chain = chain;

    const long long a_block = static_cast<long long>(n) * chain;
    const long long off_b = a_block;
    const long long off_c = off_b + n;
    const long long off_int = off_c + n;
    const long long internals = 6LL * m * (x - 1);
    const long long total = off_int + internals;

    auto id_a = [&](int u, int pos) {  // pos is 1-based
        return static_cast<int>(static_cast<long long>(u) * chain + (pos - 1));
    };
    auto id_b = [&](int u) { return static_cast<int>(off_b + u); };
    auto id_c = [&](int u) { return static_cast<int>(off_c + u); };
    // directed path slot: edge index e, pair in {0,1,2}, orientation in {0,1}
    auto id_int = [&](long long e, int pair, int orient, int pos) {
        long long slot = (e * 3 + pair) * 2 + orient;
        return static_cast<int>(off_int + slot * (x - 1) + (pos - 1));
    };

    out.node_origin.resize(static_cast<size_t>(total));
    for (int u = 0; u < n; ++u) {
        for (int p = 1; p <= chain; ++p)
            out.node_origin[id_a(u, p)] = {GadgetRole::copy_a, u, -1, -1, p};
        out.node_origin[id_b(u)] = {GadgetRole::copy_b, u, -1, -1, 1};
        out.node_origin[id_c(u)] = {GadgetRole::copy_c, u, -1, -1, 1};
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(6 * m * x + static_cast<long long>(n) * (chain - 1)));

    for (int u = 0; u < n; ++u)
        for (int p = 1; p < chain; ++p)
            edges.emplace_back(id_a(u, p), id_a(u, p + 1));

    // one subdivided path per directed copy-pair edge
    auto add_path = [&](int from, int to, long long e, int pair, int orient, int tail,
                        int head) {
        int prev = from;
        for (int p = 1; p < x; ++p) {
            int mid = id_int(e, pair, orient, p);
            out.node_origin[mid] = {GadgetRole::path_internal, tail, head, pair, p};
            edges.emplace_back(prev, mid);
            prev = mid;
        }
        edges.emplace_back(prev, to);
    };

    for (long long e = 0; e < m; ++e) {
        auto [u, v] = g.edges[static_cast<size_t>(e)];
        // orientation 0: u -> v, orientation 1: v -> u
        add_path(id_a(u, 1), id_b(v), e, 0, 0, u, v);
        add_path(id_a(v, 1), id_b(u), e, 0, 1, v, u);
        add_path(id_b(u), id_c(v), e, 1, 0, u, v);
        add_path(id_b(v), id_c(u), e, 1, 1, v, u);
        add_path(id_c(u), id_a(v, chain), e, 2, 0, u, v);
        add_path(id_c(v), id_a(u, chain), e, 2, 1, v, u);
    }

    out.graph = Graph::from_edges(static_cast<int>(total), std::move(edges));
    return out;
}

bool verify_reduction(const Graph& g, int k, const OracleBudget& budget) {
    check_gadget_k(k);
    bool has_triangle = find_triangle(g).has_value();
    GadgetGraph gg = build_gadget(g, k);
    bool has_cycle = oracle_has_cycle(gg.graph, 2 * k, budget).has_value();
    return has_triangle == has_cycle;
}

std::array<int, 3> map_witness_to_triangle(const GadgetGraph& gg, const Cycle& witness) {
    std::set<int> in_a, in_b, in_c;
    for (int v : witness.vertices) {
        if (v < 0 || v >= static_cast<int>(gg.node_origin.size()))
            throw std::invalid_argument("witness vertex outside the gadget");
        const GadgetOrigin& o = gg.node_origin[v];
        switch (o.role) {
            case GadgetRole::copy_a: in_a.insert(o.u); break;
            case GadgetRole::copy_b: in_b.insert(o.u); break;
            case GadgetRole::copy_c: in_c.insert(o.u); break;
            case GadgetRole::path_internal: break;
        }
    }
    if (in_a.size() != 1 || in_b.size() != 1 || in_c.size() != 1)
        throw std::invalid_argument("witness does not have the one-vertex-per-copy shape");
    return {*in_a.begin(), *in_b.begin(), *in_c.begin()};
}

}  // namespace evencycle

#include "evencycle/capped_walks.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace evencycle {

namespace {

WalkCount walks_in_subgraph(const Subgraph& sub, int k) {
    const Graph& h = sub.graph;
    std::vector<WalkCount> cur(h.n, 0), nxt(h.n);
    cur[0] = 1;  // local 0 is the start vertex
    for (int t = 0; t < k; ++t) {
        for (int v = 0; v < h.n; ++v) {
            nxt[v] = 0;
            for (int w : h.adj[v]) nxt[v] += cur[w];
        }
        cur.swap(nxt);
    }
    WalkCount sum = 0;
    for (const auto& c : cur) sum += c;
    return sum;
}

}  // namespace

WalkCount count_from(const Graph& g, const DegreeOrder& ord, int i, int k) {
    if (k < 1) throw std::invalid_argument("walk length k must be >= 1");
    if (i < 1 || i > g.n) throw std::invalid_argument("order position out of range");
    CappedNeighborhoodBuilder builder(g, ord);
    return walks_in_subgraph(builder.build(i, k), k);
}

CappedWalkCensus count_capped_walks(const Graph& g, const DegreeOrder& ord, int k) {
    if (k < 1) throw std::invalid_argument("walk length k must be >= 1");
    if (!valid_order(g, ord)) throw std::invalid_argument("order is not a permutation of V");
    CappedWalkCensus census;
    census.k = k;
    census.ordering = ord;
    census.per_start.assign(g.n, 0);
    CappedNeighborhoodBuilder builder(g, ord);
    for (int i = 1; i <= g.n; ++i) {
        WalkCount c = walks_in_subgraph(builder.build(i, k), k);
        census.per_start[ord.order[i - 1]] = c;
        census.total += c;
    }
    return census;
}

LowerBoundCheck check_lower_bound(const Graph& g, const CappedWalkCensus& census) {
    LowerBoundCheck out;
    if (g.n == 0) {
        out.holds = true;
        out.ratio = 1.0;
        return out;
    }
    WalkCount lhs = census.total;
    WalkCount scale, mk;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(2 * g.n),
                  static_cast<unsigned long>(census.k));
    mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(g.m),
                  static_cast<unsigned long>(census.k));
    lhs *= scale;
    WalkCount rhs = mk * g.n;
    out.holds = lhs >= rhs;
    if (rhs == 0)
        out.ratio = lhs == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    else
        out.ratio = mpq_class(lhs, rhs).get_d();
    return out;
}

UpperBoundDiagnostic check_upper_bound_diagnostic(const Graph& g,
                                                  const CappedWalkCensus& census,
                                                  int k) {
    UpperBoundDiagnostic out;
    double cap = g.m > 0 ? std::pow(static_cast<double>(g.m), 2.0 / (k + 1)) : 0.0;
    out.max_degree_ok = true;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > cap) out.max_degree_ok = false;
    out.degree_ordered = true;
    for (size_t i = 0; i + 1 < census.ordering.order.size(); ++i)
        if (g.degree(census.ordering.order[i]) > g.degree(census.ordering.order[i + 1]))
            out.degree_ordered = false;
    if (g.m == 0) {
        out.normalized = 0.0;
        return out;
    }
    bool loss = false;
    double total = to_double_checked(census.total, loss);
    out.normalized =
        total / std::pow(static_cast<double>(g.m), 2.0 * k / (k + 1));
    return out;
}

}  // namespace evencycle

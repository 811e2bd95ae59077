#pragma once

#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"

namespace evencycle {

// Exact census of capped k-walks: walks (x_0,...,x_k) along edges whose every
// vertex satisfies rank(x_i) <= rank(x_0) under the given order. per_start is
// indexed by vertex id.
struct CappedWalkCensus {
    std::vector<WalkCount> per_start;
    WalkCount total = 0;
    int k = 0;
    DegreeOrder ordering;
};

// Capped k-walks starting at the vertex of order position i (1-based). The
// walk DP runs inside the same capped prefix neighborhood the finder builds,
// so the census cost mirrors the finder's work exactly.
WalkCount count_from(const Graph& g, const DegreeOrder& ord, int i, int k);

CappedWalkCensus count_capped_walks(const Graph& g, const DegreeOrder& ord, int k);

// Exact check of the unconditional lower bound total >= n * (m/2n)^k,
// evaluated in integers as total * (2n)^k >= n * m^k. ratio is total over the
// bound (1 when both sides are zero). Holds for every graph and every order.
struct LowerBoundCheck {
    bool holds = false;
    double ratio = 0.0;
};

LowerBoundCheck check_lower_bound(const Graph& g, const CappedWalkCensus& census);

// Diagnostic normalization total / m^{2k/(k+1)}. The theory bounds this by a
// k-only factor on C_{2k}-free degree-ordered graphs with max degree at most
// m^{2/(k+1)}, but with an unspecified constant, so this reports data instead
// of asserting a threshold. C_{2k}-freeness is the caller's obligation; the
// checkable preconditions are reported in the flags.
struct UpperBoundDiagnostic {
    double normalized = 0.0;
    bool max_degree_ok = false;
    bool degree_ordered = false;
};

UpperBoundDiagnostic check_upper_bound_diagnostic(const Graph& g,
                                                  const CappedWalkCensus& census,
                                                  int k);

}  // namespace evencycle

#pragma once

#include <cstdint>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"

namespace evencycle {

// The sqrt-counting norm of a real vector: integral over x >= 0 of
// sqrt(#{i : |v_i| >= x}). The integrand is a step function with at most n
// steps, so sorting |v| descending as a_1 >= ... >= a_n gives the exact
// closed form sum_j (sqrt(j) - sqrt(j-1)) * a_j. Rejects NaN/inf input.
double snorm(const std::vector<double>& v);

// Alternate summation order sum_j sqrt(j) * (a_j - a_{j+1}); agrees with
// snorm to relative 1e-12 and exists purely as a cross-check.
double snorm_alt(const std::vector<double>& v);

// Direct numeric integration of the defining integral: composite midpoint
// rule over a uniform grid of `grid_points` cells on [0, max|v_i|], with the
// step-function breakpoints added as extra cell boundaries (a blind uniform
// grid cannot certify 1e-6 agreement; with breakpoints each cell has a
// constant integrand and the rule is exact up to roundoff).
double snorm_by_integration(const std::vector<double>& v, int grid_points);

// Triangle inequality, absolute homogeneity with factor c, and definiteness
// for u, v. Relative tolerance 1e-9 with absolute floor 1e-12.
bool check_snorm_axioms(const std::vector<double>& u, const std::vector<double>& v,
                        double c);

// Shared shape for inequality checks: lhs is the measured quantity, rhs the
// bound, slack = rhs/lhs (1 when both sides are zero, +inf when only lhs is).
// precision_loss marks an exact integer that exceeded 2^53 on conversion.
struct SlackCheck {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool precision_loss = false;
};

// Exact count of k-walks starting in S against sqrt(|S|) * snorm(X^k 1).
// Holds unconditionally on every graph; S must be duplicate-free.
SlackCheck check_kwalks_set(const Graph& g, const std::vector<int>& S, int k);

// Square 0/1 matrix as rows.
using ZeroOneMatrix = std::vector<std::vector<int>>;

ZeroOneMatrix adjacency_matrix(const Graph& g);

// Exhaustive 0/1-restricted norm sup C = max over nonzero 0/1 vectors v of
// snorm(Av)/snorm(v), then `samples` seeded real vectors (mixed-sign,
// heavy-tailed, sparse families round-robin) each asserted to satisfy
// snorm(Av) <= 16*C*snorm(v). Exhaustive part is 2^n, so n <= 20 enforced.
struct ZeroOneNormReport {
    double c_zero_one = 0.0;
    double max_sampled_ratio = 0.0;
    int samples_run = 0;
    bool holds = true;
};

ZeroOneNormReport check_zero_one_norm_bound(const ZeroOneMatrix& a, int samples,
                                            uint64_t seed);

// |E(A,B)| <= 100k * (sqrt(|A|*|B|)^{1+1/k} + |A| + |B|) for C_{2k}-free g.
// An edge is counted once when one endpoint is in A and the other in B (in
// either role). C_{2k}-freeness is the caller's precondition.
SlackCheck check_modified_bs(const Graph& g, const std::vector<int>& A,
                             const std::vector<int>& B, int k);

// Empirical lower estimate of the graph-matrix norm constant: max over
// sampled indicator vectors 1_A of snorm(X 1_A) / (sqrt(|A|) * m^{1/(k+1)}).
// Diagnostic only; the true sup ranges over all real vectors.
struct MatrixSnormDiagnostic {
    double max_ratio = 0.0;
    int samples_run = 0;
};

MatrixSnormDiagnostic estimate_matrix_snorm_diagnostic(const Graph& g, int k,
                                                       int samples, uint64_t seed);

}  // namespace evencycle

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "evencycle/graph.hpp"

namespace evencycle {

// Exact arbitrary-precision walk count.
using WalkCount = mpz_class;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Node-expansion budget for the exhaustive searches. Overrunning raises
// BudgetExceeded instead of returning a truncated (possibly wrong) answer.
struct OracleBudget {
    uint64_t max_expansions = 100'000'000ULL;
};

// Exhaustive search for a simple cycle of exactly L vertices (L >= 3).
// Ground-truth reference: correct on any input, intended for desk-scale
// graphs. Enumerates simple paths with canonical-start pruning -- a cycle is
// reported only from its minimum vertex, walking toward its smaller second
// endpoint -- so each cycle is visited once instead of 2L times.
std::optional<Cycle> oracle_has_cycle(const Graph& g, int L, const OracleBudget& budget = {});

// Same search restricted to cycles through u.
std::optional<Cycle> oracle_cycle_through(const Graph& g, int u, int L,
                                          const OracleBudget& budget = {});

// First triangle found by sorted-adjacency intersection, or nullopt.
// Independent of the DFS machinery above.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

// Entrywise-exact X^k * 1: entry v counts the k-walks starting at v.
std::vector<WalkCount> walk_count_vector(const Graph& g, int k);

// Exact number of walks (x_0,...,x_k) with x_0 in S, as <X^k 1, 1_S>.
WalkCount oracle_count_k_walks(const Graph& g, const std::vector<int>& S, int k);

// Lossless-when-possible conversion; sets precision_loss when the integer
// needs more than a double's 53 mantissa bits.
double to_double_checked(const WalkCount& x, bool& precision_loss);

}  // namespace evencycle

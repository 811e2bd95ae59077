#pragma once

#include <array>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"

namespace evencycle {

enum class GadgetRole { copy_a, copy_b, copy_c, path_internal };

// Provenance of one gadget vertex. Copy roles carry the original vertex in u
// (copy_a also carries its chain position, 1-based). Path internals carry the
// directed original edge (u -> v), which copy pair the path belongs to
// (0: A->B, 1: B->C, 2: C->A), and the 1-based position along the path.
struct GadgetOrigin {
    GadgetRole role = GadgetRole::copy_a;
    int u = -1;
    int v = -1;
    int pair = -1;
    int position = 0;
};

struct TripartiteResult {
    Graph graph;
    std::vector<GadgetOrigin> origins;
};

// Three copies A, B, C of V; every original edge {u,v} contributes both
// orientations of the three copy-pair edges: (u_A,v_B), (u_B,v_C), (u_C,v_A)
// and (v_A,u_B), (v_B,u_C), (v_C,u_A). The result has a triangle iff g does,
// and every triangle of the result has one vertex per copy.
// Layout: u_A = u, u_B = n + u, u_C = 2n + u.
TripartiteResult build_tripartite(const Graph& g);

// Subdivision length and A-chain length for the triangle reduction at k.
int gadget_subdivision_length(int k);  // x = ceil((2k+1)/4)
int gadget_chain_length(int k);        // max(1, 2k - 3x + 1)

// The reduction gadget: the tripartite graph with every edge replaced by a
// path of x edges and every A-copy expanded into a chain (when 2k > 3x).
// A->B paths leave chain position 1; C->A paths arrive at the last position.
// Vertex numbering is deterministic: A-chains grouped by original vertex,
// then B copies, then C copies, then path internals grouped by
// (original edge, copy pair, orientation, position).
struct GadgetGraph {
    Graph graph;
    int k = 0;
    int x = 0;
    int chain = 0;
    std::vector<GadgetOrigin> node_origin;
};

// Requires k >= 3 and k != 4 (the reduction arithmetic needs 2k >= 3x, which
// fails exactly there); throws std::invalid_argument otherwise.
GadgetGraph build_gadget(const Graph& g, int k);

// Independent-oracle check of the reduction: [g has a triangle] ==
// [gadget has a 2k-cycle]. Propagates BudgetExceeded from the cycle oracle.
bool verify_reduction(const Graph& g, int k, const OracleBudget& budget = {});

// Maps a 2k-cycle of the gadget back to the original triangle via
// node_origin. Throws std::invalid_argument if the cycle does not have the
// canonical one-vertex-per-copy shape (impossible for a genuine witness).
std::array<int, 3> map_witness_to_triangle(const GadgetGraph& gg, const Cycle& witness);

}  // namespace evencycle

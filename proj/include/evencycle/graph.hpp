#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evencycle {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph. Vertices are dense 0-based ids,
// adjacency lists are sorted, and `edges` is the canonical (u<v, sorted)
// edge list. Construction validates simplicity: self-loops and duplicate
// edges are rejected rather than repaired.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
};

// Edge-list text format: optional first content line "p <n> <m>", then one
// "<u> <v>" pair per line. '#' lines are comments; LF and CRLF both accepted.
// Vertex count is 1 + max id unless the header declares it. Rejects
// self-loops, duplicate edges and malformed tokens with the line number.
Graph parse_graph(const std::string& text);

// Canonical serialization: header line, then edges sorted by (u,v) with u<v.
std::string serialize_graph(const Graph& g);

// A total order on vertices as a rank permutation. `rank[v]` is the position
// of v, `order[i]` the vertex at position i; the two are mutually inverse.
struct DegreeOrder {
    std::vector<int> rank;
    std::vector<int> order;
};

// Non-decreasing degree with vertex id as the tie-break, so runs are
// deterministic: rank[u] < rank[v] iff (deg(u), u) < (deg(v), v).
DegreeOrder degree_order(const Graph& g);

// Plain id order and a seeded random order; both satisfy the DegreeOrder
// shape and feed the same counting machinery.
DegreeOrder id_order(const Graph& g);
DegreeOrder random_order(const Graph& g, uint64_t seed);

bool valid_order(const Graph& g, const DegreeOrder& ord);

// A simple cycle, stored as its vertex sequence.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
};

// True iff the vertices are pairwise distinct, every consecutive pair (with
// wraparound) is an edge of g, and the length equals expected_len (when >= 0).
bool validate_cycle(const Graph& g, const Cycle& c, int expected_len = -1);

// A vertex-induced piece of a parent graph together with the relabeling map
// back to it: local id i corresponds to parent vertex to_parent[i].
struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;
};

// Builds the distance-capped prefix neighborhood around the i-th vertex of
// the order (i is 1-based): BFS from v_i inside the subgraph induced by the
// first i vertices, keeping every edge with an endpoint at distance < k from
// v_i. Local vertex 0 is always v_i. Neighbor scans filter by rank on the
// full adjacency instead of materializing the induced prefix graph, so the
// cost per call is proportional to the edges actually touched.
class CappedNeighborhoodBuilder {
public:
    CappedNeighborhoodBuilder(const Graph& g, const DegreeOrder& ord);

    Subgraph build(int i, int k);

private:
    const Graph& g_;
    const DegreeOrder& ord_;
    std::vector<int> dist_, dist_epoch_;
    std::vector<int> local_, local_epoch_;
    std::vector<int> queue_;
    int epoch_ = 0;
};

Subgraph capped_neighborhood(const Graph& g, const DegreeOrder& ord, int i, int k);

// Edge threshold 100*k*n^(1+1/k) above which a 2k-cycle is guaranteed to
// exist, so a decision procedure may answer yes without a witness.
double density_threshold(long long n, int k);
bool density_shortcut(long long n, long long m, int k);
bool density_shortcut(const Graph& g, int k);

}  // namespace evencycle

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromaroot/vset.hpp"

namespace chromaroot {

using VertexId = int;

// Simple undirected graph on dense vertex ids 0..n-1. No loops, no
// multi-edges; values are immutable in spirit (mutators exist for
// construction, all structural operations return fresh graphs).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(VertexId u, VertexId v) const;
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);
    int add_vertex();

    int degree(VertexId v) const;
    const VSet& neighbors_mask(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;  // lexicographic, u < v
    VSet vertices_mask() const { return VSet::first_n(n_); }

    bool is_connected() const;
    // Connected components as vertex sets, ordered by smallest member.
    std::vector<VSet> components() const;
    // Components of the graph restricted to vertices outside `removed`.
    std::vector<VSet> components_excluding(const VSet& removed) const;

    // Induced subgraph on `keep`, repacked to dense ids in host order.
    // host_ids, when given, receives the host id of each local vertex.
    Graph induced(const VSet& keep, std::vector<VertexId>* host_ids = nullptr) const;
    Graph without_vertex(VertexId v) const;
    Graph with_edge(VertexId u, VertexId v) const;
    Graph without_edge(VertexId u, VertexId v) const;
    // Identify v into u (u, v need not be adjacent), drop loops/multi-edges,
    // repack to dense ids.
    Graph contracted(VertexId u, VertexId v) const;

    bool operator==(const Graph&) const = default;

    // Raw adjacency bytes; hash/equality key for exact labelled graphs.
    std::string adjacency_key() const;

private:
    int n_ = 0;
    std::vector<VSet> adj_;

    void check_vertex(VertexId v) const;
};

// An unordered pair of distinct vertices, stored with x < y.
struct CutPair {
    VertexId x;
    VertexId y;

    CutPair(VertexId a, VertexId b) : x(a < b ? a : b), y(a < b ? b : a) {}
    auto operator<=>(const CutPair&) const = default;
};

// One {x,y}-bridge: the subgraph induced by a component of g - {x,y}
// together with the cut vertices (the edge xy itself, if present in the
// host, is not part of any bridge). Carries the mapping back to host ids.
struct Bridge {
    CutPair host_cut;
    Graph graph;                      // repacked
    std::vector<VertexId> host_ids;   // host id of each local vertex
    VertexId local_x;                 // position of host_cut.x in `graph`
    VertexId local_y;

    bool trivial() const { return graph.vertex_count() == 3; }
    // Interior host vertices (everything except the cut pair).
    std::vector<VertexId> interior_host_ids() const;
};

enum class ConnectivityLevel { disconnected = 0, one = 1, two = 2, three_plus = 3 };

// Vertex connectivity capped at 3; complete graphs report min(n-1, 3).
// Throws std::invalid_argument("empty input") on the empty graph.
ConnectivityLevel connectivity_level(const Graph& g);

// All 2-cuts of a 2-connected graph, lexicographic. Throws
// std::invalid_argument("requires 2-connected graph") otherwise.
std::vector<CutPair> two_cuts(const Graph& g);

// Bridges of a 2-cut, ordered by smallest interior vertex. Throws if the
// pair is not a 2-cut of g.
std::vector<Bridge> bridges_of(const Graph& g, const CutPair& cut);

// Articulation vertices of a connected graph, ascending.
std::vector<VertexId> cut_vertices(const Graph& g);

// Canonical-form byte string; equal iff the graphs are isomorphic.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Graph& g);
// Colour-aware variant: codes are equal iff there is a colour-preserving
// isomorphism. `colors` must have one small non-negative entry per vertex.
CanonicalCode canonical_code(const Graph& g, const std::vector<int>& colors);
// The canonically relabelled graph itself.
Graph canonical_form(const Graph& g);

// Standard graph6 encoding (N(n) header, upper-triangle bits column-major,
// 6 bits per byte offset 63).
std::string graph6_encode(const Graph& g);
// Throws std::invalid_argument with the offending byte offset on malformed
// input.
Graph graph6_decode(const std::string& s);

std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace chromaroot

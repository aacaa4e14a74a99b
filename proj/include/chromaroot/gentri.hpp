#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chromaroot/graph.hpp"

namespace chromaroot {

// Construction trace: replaying the recorded subdivisions from K3
// reproduces the final graph.
struct GentriTrace {
    Graph base;  // K3
    // graph state before the step, and the edge chosen for double
    // subdivision in that state
    std::vector<std::pair<Graph, std::pair<VertexId, VertexId>>> steps;

    Graph replay() const;
};

// Replace edge uv by two new degree-2 vertices joined to both u and v.
// The new vertices take the next two ids.
Graph double_subdivide(const Graph& g, VertexId u, VertexId v);

// K3, or reachable from K3 by double subdivisions: equivalently 2-connected
// but not 3-connected, with every 2-cut non-adjacent, spanning exactly
// three bridges, none of them 2-connected.
bool is_generalised_triangle(const Graph& g);

// Canonical representatives of all generalised triangles with 3, 5, ...,
// n_max vertices, grouped by vertex count, each level sorted by canonical
// code. n_max must be odd and >= 3.
std::vector<std::vector<Graph>> enumerate_gentri_levels(int n_max, int jobs = 1);
std::vector<Graph> enumerate_gentri(int n_max, int jobs = 1);

// Inverse double subdivisions: for each 2-cut with at least two trivial
// bridges, the graph obtained by removing the interiors of the first two
// trivial bridges and adding the cut edge. Empty for K3.
std::vector<std::pair<Graph, CutPair>> reverse_steps(const Graph& g);

// Order of the double-subdivision poset: true iff g can be obtained from h
// by a sequence of double subdivisions (backward search with canonical
// memoisation). Both arguments must be generalised triangles.
bool poset_minor(const Graph& h, const Graph& g);
// Witness chain h = w_0, w_1, ..., w_k = g together with the edge
// subdivided at each forward step (edge of w_i, in w_i's labelling).
std::optional<GentriTrace> poset_minor_witness(const Graph& h, const Graph& g);

// General minor test by exhaustive search over vertex-disjoint connected
// branch sets, h-vertices assigned in descending-degree order. Host graphs
// are capped at 13 vertices.
bool brute_minor(const Graph& h, const Graph& g);

struct FixedGraphs {
    Graph h0;  // K3 with every edge double subdivided (9 vertices)
    Graph h1;  // K_{2,3}, the three edges at one degree-3 vertex subdivided
    Graph h2;  // K_{2,3}, edges xu, xv, yw subdivided
};
FixedGraphs fixed_graphs();

// K2 on {u,v}, or reachable from it by double subdivisions with the
// terminals fixed (backward search, memoised on terminal-coloured codes).
bool is_generalised_edge(const Graph& g, VertexId u, VertexId v);

}  // namespace chromaroot

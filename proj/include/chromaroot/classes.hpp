#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chromaroot/graph.hpp"

namespace chromaroot {

// P1: in every bridge of the cut, x or y has degree 1.
// P2: some bridge of the cut is trivial.
enum class CutProperty { P1, P2 };

bool cut_satisfies(const Graph& g, const CutPair& cut, CutProperty p);

// Membership in K1 / K2 / K1 ∩ K2: the property holds at every 2-cut.
// Throws std::invalid_argument if g is not a generalised triangle.
bool in_K1(const Graph& g);
bool in_K2(const Graph& g);
bool in_K1K2(const Graph& g);

// Property of a generalised uv-edge (|V| >= 4): every 2-cut lying inside a
// single {u,v}-bridge satisfies the given cut property. K2 qualifies
// vacuously.
bool gen_edge_has_property(const Graph& g, VertexId u, VertexId v, CutProperty p);

// Re-attach one component of g - cut with the roles of the cut vertices
// exchanged.
struct SwitchStep {
    CutPair cut;
    VSet component;
};
Graph whitney_switch(const Graph& g, const SwitchStep& step);

// Bitmask DP over (subset, endpoint); graphs capped at 21 vertices.
std::optional<std::vector<VertexId>> hamiltonian_path(const Graph& g);

// Whitney 2-switch sequence turning a member of K1 ∩ K2 into a graph with
// a Hamiltonian path (same chromatic polynomial by the switch invariance).
std::pair<Graph, std::vector<SwitchStep>> to_ham_form(const Graph& g);

// J_0 = K3 with marked vertex 0; J_i subdivides every edge at the mark.
// Every member lies in K1 (checked on construction).
Graph j_sequence_k1(int i);

// J_0 = K3 with outer cycle 0-1-2; J_i subdivides every outer edge, the
// first new vertex of each step joining the outer cycle. Members lie in K2
// (checked on construction).
struct OuterGraph {
    Graph graph;
    std::vector<VertexId> outer_cycle;
};
OuterGraph j_sequence_k2(int i);

}  // namespace chromaroot

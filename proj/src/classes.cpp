#include "chromaroot/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "chromaroot/gentri.hpp"

namespace chromaroot {

bool cut_satisfies(const Graph& g, const CutPair& cut, CutProperty p) {
    auto bridges = bridges_of(g, cut);  // throws on invalid cut
    if (p == CutProperty::P2) {
        return std::any_of(bridges.begin(), bridges.end(),
                           [](const Bridge& b) { return b.trivial(); });
    }
    for (const auto& b : bridges)
        if (b.graph.degree(b.local_x) != 1 && b.graph.degree(b.local_y) != 1) return false;
    return true;
}

namespace {

bool in_class(const Graph& g, CutProperty p) {
    if (!is_generalised_triangle(g)) throw std::invalid_argument("not a generalised triangle");
    if (g.vertex_count() == 3) return true;  // no 2-cuts
    for (const auto& cut : two_cuts(g))
        if (!cut_satisfies(g, cut, p)) return false;
    return true;
}

}  // namespace

bool in_K1(const Graph& g) { return in_class(g, CutProperty::P1); }
bool in_K2(const Graph& g) { return in_class(g, CutProperty::P2); }
bool in_K1K2(const Graph& g) { return in_K1(g) && in_K2(g); }

bool gen_edge_has_property(const Graph& g, VertexId u, VertexId v, CutProperty p) {
    if (g.vertex_count() == 2) return true;
    auto bridges = bridges_of(g, CutPair{u, v});
    for (const auto& cut : two_cuts(g)) {
        bool inside_one_bridge = false;
        for (const auto& b : bridges) {
            VSet verts;
            for (VertexId id : b.host_ids) verts.set(id);
            if (verts.test(cut.x) && verts.test(cut.y)) {
                inside_one_bridge = true;
                break;
            }
        }
        if (inside_one_bridge && !cut_satisfies(g, cut, p)) return false;
    }
    return true;
}

Graph whitney_switch(const Graph& g, const SwitchStep& step) {
    VSet pair = VSet::single(step.cut.x);
    pair.set(step.cut.y);
    auto comps = g.components_excluding(pair);
    if (std::find(comps.begin(), comps.end(), step.component) == comps.end())
        throw std::invalid_argument("not a component of the graph minus the cut");
    Graph out = g;
    for (int z = step.component.first(); z != -1; z = step.component.next(z)) {
        bool had_x = g.has_edge(step.cut.x, z);
        bool had_y = g.has_edge(step.cut.y, z);
        if (had_x == had_y) continue;
        if (had_x) {
            out.remove_edge(step.cut.x, z);
            out.add_edge(step.cut.y, z);
        } else {
            out.remove_edge(step.cut.y, z);
            out.add_edge(step.cut.x, z);
        }
    }
    return out;
}

std::optional<std::vector<VertexId>> hamiltonian_path(const Graph& g) {
    int n = g.vertex_count();
    if (n > 21) throw std::invalid_argument("graph too large for subset DP (21 vertex cap)");
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<VertexId>{0};
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (VertexId u : g.neighbors(v)) adj[v] |= std::uint32_t(1) << u;
    std::uint32_t full = (std::uint32_t(1) << n) - 1;
    // bit v of dp[mask]: a path covering mask can end at v
    std::vector<std::uint32_t> dp(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[std::uint32_t(1) << v] = std::uint32_t(1) << v;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        std::uint32_t candidates = full & ~mask;
        while (candidates) {
            int u = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (adj[u] & ends) dp[mask | (std::uint32_t(1) << u)] |= std::uint32_t(1) << u;
        }
    }
    if (!dp[full]) return std::nullopt;
    // reconstruct backwards
    std::vector<VertexId> path;
    std::uint32_t mask = full;
    int end = std::countr_zero(dp[full]);
    while (true) {
        path.push_back(end);
        std::uint32_t rest = mask & ~(std::uint32_t(1) << end);
        if (!rest) break;
        std::uint32_t prevs = dp[rest] & adj[end];
        end = std::countr_zero(prevs);
        mask = rest;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

VSet bridge_vertex_set(const Bridge& b) {
    VSet s;
    for (VertexId id : b.host_ids) s.set(id);
    return s;
}

const Bridge* find_bridge_with_vertices(const std::vector<Bridge>& bridges, const VSet& verts) {
    for (const auto& b : bridges)
        if (bridge_vertex_set(b) == verts) return &b;
    return nullptr;
}

int degree_within(const Graph& g, VertexId v, const VSet& verts) {
    return (g.neighbors_mask(v) & verts).count();
}

// The procedure behind to_ham_form: rearrange (by Whitney switches) the
// {x,y}-bridge with vertex set `bverts`, in which y has degree 1, so that
// it carries a path starting at x and covering all of it except y.
// Returns that path.
std::vector<VertexId> build_spanning_path(Graph& g, std::vector<SwitchStep>& steps, VSet bverts,
                                          VertexId x, VertexId y) {
    if (bverts.count() == 3) {
        VSet inner = bverts;
        inner.reset(x);
        inner.reset(y);
        return {x, inner.first()};
    }
    // z: the single neighbour of y inside the bridge
    VSet inside = bverts;
    inside.reset(y);
    VSet y_nb = g.neighbors_mask(y) & inside;
    if (y_nb.count() != 1) throw std::logic_error("cut vertex degree is not 1 in bridge");
    VertexId z = y_nb.first();

    // {x,z} cuts off two bridges inside bverts: one trivial (x-w-z), one to
    // recurse into
    auto xz_bridges = bridges_of(g, CutPair{x, z});
    const Bridge* trivial = nullptr;
    const Bridge* other = nullptr;
    VSet allowed = bverts;
    allowed.reset(y);
    for (const auto& b : xz_bridges) {
        VSet verts = bridge_vertex_set(b);
        if (!verts.subset_of(allowed)) continue;
        if (b.trivial() && !trivial)
            trivial = &b;
        else
            other = &b;
    }
    if (!trivial || !other) throw std::logic_error("expected one trivial inner bridge at {x,z}");
    VertexId w = trivial->interior_host_ids().front();
    VSet other_verts = bridge_vertex_set(*other);

    // make x the degree-1 terminal of the non-trivial inner bridge
    if (degree_within(g, x, other_verts) != 1) {
        if (degree_within(g, z, other_verts) != 1)
            throw std::logic_error("inner bridge violates the degree-1 property");
        VSet component = other_verts;
        component.reset(x);
        component.reset(z);
        SwitchStep step{CutPair{x, z}, component};
        g = whitney_switch(g, step);
        steps.push_back(std::move(step));
    }
    std::vector<VertexId> tail = build_spanning_path(g, steps, other_verts, z, x);
    std::vector<VertexId> path{x, w};
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
}

}  // namespace

std::pair<Graph, std::vector<SwitchStep>> to_ham_form(const Graph& g) {
    if (!in_K1K2(g)) throw std::invalid_argument("requires membership in K1 and K2");
    if (g.vertex_count() == 3) return {g, {}};
    // a 2-cut with two trivial bridges exists in every generalised triangle
    // beyond K3
    for (const auto& cut : two_cuts(g)) {
        auto bridges = bridges_of(g, cut);
        std::vector<const Bridge*> trivial;
        const Bridge* big = nullptr;
        for (const auto& b : bridges) {
            if (b.trivial() && trivial.size() < 2)
                trivial.push_back(&b);
            else
                big = &b;  // when all three are trivial this keeps the last
        }
        if (trivial.size() < 2) continue;
        VertexId u = trivial[0]->interior_host_ids().front();
        VertexId v = trivial[1]->interior_host_ids().front();
        VSet bverts = bridge_vertex_set(*big);
        VertexId x = cut.x;
        VertexId y = cut.y;
        // orient so y has degree 1 in the big bridge (P1 guarantees one of
        // the two does; the trivial bridges are symmetric in x and y)
        if (degree_within(g, y, bverts) != 1) std::swap(x, y);
        if (degree_within(g, y, bverts) != 1)
            throw std::logic_error("P1 violated at the chosen cut");
        Graph work = g;
        std::vector<SwitchStep> steps;
        std::vector<VertexId> tail = build_spanning_path(work, steps, bverts, x, y);
        std::vector<VertexId> path{u, y, v};
        path.insert(path.end(), tail.begin(), tail.end());
        // the construction certifies itself: consecutive vertices adjacent,
        // all vertices covered once
        if (static_cast<int>(path.size()) != work.vertex_count())
            throw std::logic_error("constructed path does not span the graph");
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!work.has_edge(path[i], path[i + 1]))
                throw std::logic_error("constructed path skips a non-edge");
        return {work, steps};
    }
    throw std::logic_error("no 2-cut with two trivial bridges");
}

Graph j_sequence_k1(int i) {
    if (i < 0) throw std::invalid_argument("index must be non-negative");
    Graph g = Graph::complete(3);
    const VertexId x = 0;
    for (int step = 0; step < i; ++step) {
        auto incident = g.neighbors(x);
        for (VertexId v : incident) g = double_subdivide(g, x, v);
    }
    if (!in_K1(g)) throw std::logic_error("construction left K1");
    return g;
}

OuterGraph j_sequence_k2(int i) {
    if (i < 0) throw std::invalid_argument("index must be non-negative");
    Graph g = Graph::complete(3);
    std::vector<VertexId> outer{0, 1, 2};
    for (int step = 0; step < i; ++step) {
        std::vector<VertexId> next_outer;
        int k = static_cast<int>(outer.size());
        for (int j = 0; j < k; ++j) {
            VertexId a = outer[j];
            VertexId b = outer[(j + 1) % k];
            int before = g.vertex_count();
            g = double_subdivide(g, a, b);
            // first new vertex joins the outer cycle, the second lies inside
            next_outer.push_back(a);
            next_outer.push_back(before);
        }
        outer = std::move(next_outer);
    }
    if (!in_K2(g)) throw std::logic_error("construction left K2");
    return OuterGraph{std::move(g), std::move(outer)};
}

}  // namespace chromaroot

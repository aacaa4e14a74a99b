#include "chromaroot/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromaroot {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0 || n > VSet::kCapacity)
        throw std::invalid_argument("vertex count out of range");
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (const auto& row : adj_) deg_sum += row.count();
    return deg_sum / 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
}

void Graph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].reset(v);
    adj_[v].reset(u);
}

int Graph::add_vertex() {
    if (n_ >= VSet::kCapacity) throw std::invalid_argument("vertex capacity exceeded");
    adj_.emplace_back();
    return n_++;
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return adj_[v].count();
}

const VSet& Graph::neighbors_mask(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    std::vector<VertexId> out;
    for (int u = adj_[v].first(); u != -1; u = adj_[v].next(u)) out.push_back(u);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

std::vector<VSet> Graph::components_excluding(const VSet& removed) const {
    std::vector<VSet> comps;
    VSet todo = vertices_mask().minus(removed);
    while (!todo.empty()) {
        int start = todo.first();
        VSet comp = VSet::single(start);
        VSet frontier = comp;
        while (!frontier.empty()) {
            VSet grow;
            for (int v = frontier.first(); v != -1; v = frontier.next(v))
                grow |= adj_[v];
            grow = grow.minus(comp) & todo;
            comp |= grow;
            frontier = grow;
        }
        comps.push_back(comp);
        todo = todo.minus(comp);
    }
    return comps;
}

std::vector<VSet> Graph::components() const { return components_excluding(VSet{}); }

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

Graph Graph::induced(const VSet& keep, std::vector<VertexId>* host_ids) const {
    std::vector<VertexId> ids;
    for (int v = keep.first(); v != -1; v = keep.next(v)) {
        check_vertex(v);
        ids.push_back(v);
    }
    Graph g(static_cast<int>(ids.size()));
    for (int i = 0; i < g.n_; ++i)
        for (int j = i + 1; j < g.n_; ++j)
            if (adj_[ids[i]].test(ids[j])) g.add_edge(i, j);
    if (host_ids) *host_ids = std::move(ids);
    return g;
}

Graph Graph::without_vertex(VertexId v) const {
    check_vertex(v);
    VSet keep = vertices_mask();
    keep.reset(v);
    return induced(keep);
}

Graph Graph::with_edge(VertexId u, VertexId v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::without_edge(VertexId u, VertexId v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::contracted(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("cannot contract a vertex with itself");
    Graph merged = *this;
    for (int w = adj_[v].first(); w != -1; w = adj_[v].next(w))
        if (w != u) merged.add_edge(u, w);
    return merged.without_vertex(v);
}

std::string Graph::adjacency_key() const {
    std::string key;
    key.reserve(1 + n_ * 24);
    key.push_back(static_cast<char>(n_));
    for (const auto& row : adj_)
        for (auto word : row.w)
            for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((word >> (8 * b)) & 0xff));
    return key;
}

std::vector<VertexId> Bridge::interior_host_ids() const {
    std::vector<VertexId> out;
    for (VertexId id : host_ids)
        if (id != host_cut.x && id != host_cut.y) out.push_back(id);
    return out;
}

namespace {

bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool disconnects(const Graph& g, const VSet& removed) {
    return g.components_excluding(removed).size() > 1;
}

}  // namespace

ConnectivityLevel connectivity_level(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("empty input");
    if (!g.is_connected()) return ConnectivityLevel::disconnected;
    if (is_complete(g)) {
        int level = std::min(n - 1, 3);
        return static_cast<ConnectivityLevel>(level);
    }
    for (int v = 0; v < n; ++v)
        if (disconnects(g, VSet::single(v))) return ConnectivityLevel::one;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            VSet pair = VSet::single(x);
            pair.set(y);
            if (disconnects(g, pair)) return ConnectivityLevel::two;
        }
    return ConnectivityLevel::three_plus;
}

std::vector<CutPair> two_cuts(const Graph& g) {
    ConnectivityLevel level = connectivity_level(g);
    if (level != ConnectivityLevel::two && level != ConnectivityLevel::three_plus)
        throw std::invalid_argument("requires 2-connected graph");
    std::vector<CutPair> cuts;
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            VSet pair = VSet::single(x);
            pair.set(y);
            if (disconnects(g, pair)) cuts.emplace_back(x, y);
        }
    return cuts;
}

std::vector<Bridge> bridges_of(const Graph& g, const CutPair& cut) {
    VSet pair = VSet::single(cut.x);
    pair.set(cut.y);
    auto comps = g.components_excluding(pair);
    if (comps.size() < 2) throw std::invalid_argument("not a 2-cut of the graph");
    std::vector<Bridge> bridges;
    for (const auto& comp : comps) {
        VSet keep = comp | pair;
        Bridge b{cut, Graph{}, {}, -1, -1};
        b.graph = g.induced(keep, &b.host_ids);
        for (int i = 0; i < b.graph.vertex_count(); ++i) {
            if (b.host_ids[i] == cut.x) b.local_x = i;
            if (b.host_ids[i] == cut.y) b.local_y = i;
        }
        if (b.graph.has_edge(b.local_x, b.local_y)) b.graph.remove_edge(b.local_x, b.local_y);
        bridges.push_back(std::move(b));
    }
    return bridges;
}

std::vector<VertexId> cut_vertices(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("requires connected graph");
    std::vector<VertexId> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (disconnects(g, VSet::single(v))) out.push_back(v);
    return out;
}

}  // namespace chromaroot

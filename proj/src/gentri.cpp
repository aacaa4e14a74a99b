#include "chromaroot/gentri.hpp"

#include "chromaroot/parallel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace chromaroot {

Graph GentriTrace::replay() const {
    Graph g = base;
    for (const auto& [state, edge] : steps) {
        if (g != state) throw std::logic_error("trace state mismatch during replay");
        g = double_subdivide(g, edge.first, edge.second);
    }
    return g;
}

Graph double_subdivide(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge of the graph");
    Graph out = g;
    out.remove_edge(u, v);
    int a = out.add_vertex();
    int b = out.add_vertex();
    out.add_edge(u, a);
    out.add_edge(a, v);
    out.add_edge(u, b);
    out.add_edge(b, v);
    return out;
}

bool is_generalised_triangle(const Graph& g) {
    int n = g.vertex_count();
    if (n == 3) return g.edge_count() == 3;
    if (n < 3 || n % 2 == 0) return false;
    if (connectivity_level(g) != ConnectivityLevel::two) return false;
    for (const auto& cut : two_cuts(g)) {
        if (g.has_edge(cut.x, cut.y)) return false;
        auto bridges = bridges_of(g, cut);
        if (bridges.size() != 3) return false;
        for (const auto& b : bridges) {
            ConnectivityLevel level = connectivity_level(b.graph);
            if (level == ConnectivityLevel::two || level == ConnectivityLevel::three_plus)
                return false;
        }
    }
    return true;
}

std::vector<std::vector<Graph>> enumerate_gentri_levels(int n_max, int jobs) {
    if (n_max % 2 == 0) throw std::invalid_argument("n_max must be odd");
    if (n_max < 3) throw std::invalid_argument("n_max must be at least 3");
    std::vector<std::vector<Graph>> levels;
    levels.push_back({canonical_form(Graph::complete(3))});
    for (int n = 5; n <= n_max; n += 2) {
        const auto& prev = levels.back();
        std::vector<std::vector<std::pair<std::string, Graph>>> produced(prev.size());
        parallel_over(prev.size(), jobs, [&](std::size_t i) {
            const Graph& g = prev[i];
            for (auto [u, v] : g.edges()) {
                Graph canon = canonical_form(double_subdivide(g, u, v));
                produced[i].emplace_back(graph6_encode(canon), std::move(canon));
            }
        });
        std::map<std::string, Graph> level;  // dedup, sorted by code
        for (auto& batch : produced)
            for (auto& [code, graph] : batch) level.emplace(std::move(code), std::move(graph));
        std::vector<Graph> members;
        members.reserve(level.size());
        for (auto& [code, graph] : level) members.push_back(std::move(graph));
        levels.push_back(std::move(members));
    }
    return levels;
}

std::vector<Graph> enumerate_gentri(int n_max, int jobs) {
    std::vector<Graph> flat;
    for (auto& level : enumerate_gentri_levels(n_max, jobs))
        for (auto& g : level) flat.push_back(std::move(g));
    return flat;
}

std::vector<std::pair<Graph, CutPair>> reverse_steps(const Graph& g) {
    if (!is_generalised_triangle(g)) throw std::invalid_argument("not a generalised triangle");
    std::vector<std::pair<Graph, CutPair>> out;
    if (g.vertex_count() == 3) return out;
    for (const auto& cut : two_cuts(g)) {
        auto bridges = bridges_of(g, cut);
        std::vector<VertexId> trivial_interiors;
        for (const auto& b : bridges)
            if (b.trivial()) trivial_interiors.push_back(b.interior_host_ids().front());
        if (trivial_interiors.size() < 2) continue;
        VSet keep = g.vertices_mask();
        keep.reset(trivial_interiors[0]);
        keep.reset(trivial_interiors[1]);
        std::vector<VertexId> host_ids;
        Graph reduced = g.induced(keep, &host_ids);
        auto local = [&](VertexId host) {
            return static_cast<VertexId>(std::find(host_ids.begin(), host_ids.end(), host) -
                                         host_ids.begin());
        };
        reduced.add_edge(local(cut.x), local(cut.y));
        out.emplace_back(std::move(reduced), cut);
    }
    return out;
}

namespace {

// Backward reachability from g down to the target code, memoised.
bool reachable_down(const Graph& g, const std::string& target_code, int target_n,
                    std::unordered_set<std::string>& seen) {
    std::string code = graph6_encode(canonical_form(g));
    if (code == target_code) return true;
    if (!seen.insert(code).second) return false;
    if (g.vertex_count() <= target_n) return false;
    for (auto& [smaller, cut] : reverse_steps(g)) {
        (void)cut;
        if (smaller.vertex_count() < target_n) continue;
        if (reachable_down(smaller, target_code, target_n, seen)) return true;
    }
    return false;
}

}  // namespace

bool poset_minor(const Graph& h, const Graph& g) {
    if (!is_generalised_triangle(h) || !is_generalised_triangle(g))
        throw std::invalid_argument("not a generalised triangle");
    if (h.vertex_count() > g.vertex_count()) return false;
    if ((g.vertex_count() - h.vertex_count()) % 2 != 0) return false;
    std::unordered_set<std::string> seen;
    return reachable_down(g, graph6_encode(canonical_form(h)), h.vertex_count(), seen);
}

std::optional<GentriTrace> poset_minor_witness(const Graph& h, const Graph& g) {
    if (!is_generalised_triangle(h) || !is_generalised_triangle(g))
        throw std::invalid_argument("not a generalised triangle");
    if (h.vertex_count() > g.vertex_count()) return std::nullopt;
    // Forward breadth-first search from h, deduplicated by canonical code;
    // parents keep exact labelled states so the trace replays verbatim.
    std::string target = graph6_encode(canonical_form(g));
    struct Node {
        Graph state;
        int parent;  // index into nodes, -1 for the root
        std::pair<VertexId, VertexId> edge_from_parent{-1, -1};
    };
    std::vector<Node> nodes{{h, -1, {-1, -1}}};
    std::unordered_set<std::string> seen{graph6_encode(canonical_form(h))};
    std::deque<int> queue{0};
    int found = graph6_encode(canonical_form(h)) == target ? 0 : -1;
    while (found == -1 && !queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (nodes[cur].state.vertex_count() >= g.vertex_count()) continue;
        for (auto [u, v] : nodes[cur].state.edges()) {
            Graph child = double_subdivide(nodes[cur].state, u, v);
            std::string code = graph6_encode(canonical_form(child));
            if (!seen.insert(code).second) continue;
            nodes.push_back(Node{std::move(child), cur, {u, v}});
            if (code == target) {
                found = static_cast<int>(nodes.size()) - 1;
                break;
            }
            queue.push_back(static_cast<int>(nodes.size()) - 1);
        }
    }
    if (found == -1) return std::nullopt;
    GentriTrace trace;
    trace.base = h;
    std::vector<int> chain;
    for (int at = found; at != -1; at = nodes[at].parent) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        trace.steps.emplace_back(nodes[chain[i]].state, nodes[chain[i + 1]].edge_from_parent);
    return trace;
}

namespace {

using Mask = std::uint32_t;

struct BruteMinor {
    const Graph& h;
    std::vector<VertexId> order;  // h vertices, descending degree
    std::vector<Mask> h_adj_placed;
    std::vector<Mask> branch;
    std::vector<Mask> g_adj;
    int gn;

    Mask neighbors_of_set(Mask s) const {
        Mask out = 0;
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            out |= g_adj[v];
        }
        return out;
    }

    bool satisfied(const std::vector<Mask>& required, Mask set) const {
        Mask nb = neighbors_of_set(set);
        for (Mask req : required)
            if (!(req & nb)) return false;
        return true;
    }

    bool place(std::size_t idx, Mask used) {
        if (idx == order.size()) return true;
        VertexId hv = order[idx];
        std::vector<Mask> required;  // earlier branch sets hv must touch
        for (std::size_t j = 0; j < idx; ++j)
            if (h.has_edge(order[j], hv)) required.push_back(branch[j]);
        Mask all = gn == 32 ? ~Mask(0) : (Mask(1) << gn) - 1;
        Mask free = all & ~used;
        if (std::popcount(free) < static_cast<int>(order.size() - idx)) return false;
        for (int root = 0; root < gn; ++root) {
            if (!((free >> root) & 1)) continue;
            Mask above = free & ~((root == 31 ? ~Mask(0) : (Mask(1) << (root + 1)) - 1));
            Mask allowed = above | (Mask(1) << root);
            if (grow(idx, used, required, Mask(1) << root, allowed)) return true;
        }
        return false;
    }

    // Enumerate connected supersets of `set` inside `allowed` (min element
    // fixed by construction); try each as the branch set of order[idx].
    bool grow(std::size_t idx, Mask used, const std::vector<Mask>& required, Mask set,
              Mask allowed) {
        if (satisfied(required, set)) {
            branch[idx] = set;
            if (place(idx + 1, used | set)) return true;
        }
        Mask frontier = neighbors_of_set(set) & allowed & ~set;
        if (!frontier) return false;
        int f = std::countr_zero(frontier);
        if (grow(idx, used, required, set | (Mask(1) << f), allowed)) return true;
        return grow(idx, used, required, set, allowed & ~(Mask(1) << f));
    }
};

}  // namespace

bool brute_minor(const Graph& h, const Graph& g) {
    if (g.vertex_count() > 13) throw std::invalid_argument("oracle limit");
    if (h.vertex_count() > g.vertex_count()) return false;
    if (h.edge_count() > g.edge_count()) return false;
    if (h.vertex_count() == 0) return true;
    BruteMinor bm{h, {}, {}, {}, {}, g.vertex_count()};
    bm.order.resize(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) bm.order[v] = v;
    std::stable_sort(bm.order.begin(), bm.order.end(),
                     [&](VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
    bm.branch.resize(h.vertex_count());
    bm.g_adj.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        Mask m = 0;
        for (VertexId u : g.neighbors(v)) m |= Mask(1) << u;
        bm.g_adj[v] = m;
    }
    return bm.place(0, 0);
}

FixedGraphs fixed_graphs() {
    // H0: K3 on {0,1,2}, every edge double subdivided
    Graph h0 = Graph::complete(3);
    h0 = double_subdivide(h0, 0, 1);
    h0 = double_subdivide(h0, 0, 2);
    h0 = double_subdivide(h0, 1, 2);

    // K_{2,3} with parts {x,y} = {0,1} and {u,v,w} = {2,3,4}
    Graph k23(5);
    for (VertexId a : {0, 1})
        for (VertexId b : {2, 3, 4}) k23.add_edge(a, b);

    // H1: subdivide every edge at x = 0
    Graph h1 = k23;
    h1 = double_subdivide(h1, 0, 2);
    h1 = double_subdivide(h1, 0, 3);
    h1 = double_subdivide(h1, 0, 4);

    // H2: subdivide xu, xv, yw = (0,2), (0,3), (1,4)
    Graph h2 = k23;
    h2 = double_subdivide(h2, 0, 2);
    h2 = double_subdivide(h2, 0, 3);
    h2 = double_subdivide(h2, 1, 4);

    return FixedGraphs{std::move(h0), std::move(h1), std::move(h2)};
}

namespace {

std::mutex ge_memo_mu;
std::unordered_map<std::string, bool> ge_memo;

bool gen_edge_search(const Graph& g, VertexId u, VertexId v) {
    int n = g.vertex_count();
    if (n == 2) return g.has_edge(u, v) && g.edge_count() == 1;
    if (n < 4 || n % 2 != 0) return false;
    if (g.has_edge(u, v)) return false;
    {
        ConnectivityLevel level = connectivity_level(g);
        if (level != ConnectivityLevel::two && level != ConnectivityLevel::three_plus) return false;
    }
    std::vector<int> colors(n, 0);
    colors[u] = 1;
    colors[v] = 1;
    std::string key = canonical_code(g, colors).bytes;
    {
        std::lock_guard lock(ge_memo_mu);
        auto it = ge_memo.find(key);
        if (it != ge_memo.end()) return it->second;
    }
    bool result = false;
    for (const auto& cut : two_cuts(g)) {
        auto bridges = bridges_of(g, cut);
        std::vector<VertexId> deletable;
        for (const auto& b : bridges) {
            if (!b.trivial()) continue;
            VertexId interior = b.interior_host_ids().front();
            if (interior != u && interior != v) deletable.push_back(interior);
        }
        if (deletable.size() < 2) continue;
        for (std::size_t i = 0; i < deletable.size() && !result; ++i)
            for (std::size_t j = i + 1; j < deletable.size() && !result; ++j) {
                VSet keep = g.vertices_mask();
                keep.reset(deletable[i]);
                keep.reset(deletable[j]);
                std::vector<VertexId> hosts;
                Graph reduced = g.induced(keep, &hosts);
                auto local = [&](VertexId host) {
                    return static_cast<VertexId>(std::find(hosts.begin(), hosts.end(), host) -
                                                 hosts.begin());
                };
                reduced.add_edge(local(cut.x), local(cut.y));
                if (gen_edge_search(reduced, local(u), local(v))) result = true;
            }
        if (result) break;
    }
    {
        std::lock_guard lock(ge_memo_mu);
        ge_memo[key] = result;
    }
    return result;
}

}  // namespace

bool is_generalised_edge(const Graph& g, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("terminals must be distinct");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw std::invalid_argument("vertex id out of range");
    return gen_edge_search(g, u, v);
}

}  // namespace chromaroot

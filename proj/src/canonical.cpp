#include <algorithm>
#include <stdexcept>

#include "chromaroot/graph.hpp"

namespace chromaroot {

namespace {

// Equitable refinement. Colours are ranks 0..k-1 ordered by
// (previous colour, sorted neighbour-colour multiset); the rank order is a
// graph invariant, so refinement commutes with isomorphism.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
    int n = g.vertex_count();
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, colors[v] + 1);
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colors[v]);
            const VSet& nb = g.neighbors_mask(v);
            for (int u = nb.first(); u != -1; u = nb.next(u)) sig[v].push_back(colors[u]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
            next[order[i]] = rank;
        }
        if (rank + 1 == classes) return next;
        classes = rank + 1;
        colors = std::move(next);
    }
}

// Adjacency bytes of g relabelled so that vertex v gets position perm[v];
// any fixed total order works, graph6 keeps codes printable.
std::string leaf_string(const Graph& g, const std::vector<int>& perm,
                        const std::vector<int>& init_colors) {
    int n = g.vertex_count();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    Graph relabeled(n);
    for (auto [u, v] : g.edges()) relabeled.add_edge(perm[u], perm[v]);
    std::string s = graph6_encode(relabeled);
    if (!init_colors.empty()) {
        s.push_back('#');
        for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + init_colors[inv[i]]));
    }
    return s;
}

struct CanonSearch {
    const Graph& g;
    const std::vector<int>& init_colors;
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;

    // True if swapping a and b is an automorphism (identical neighbourhoods,
    // allowing for a shared edge). Such vertices produce isomorphic branches.
    bool twins(int a, int b) const {
        VSet na = g.neighbors_mask(a);
        VSet nb = g.neighbors_mask(b);
        if (na == nb) return true;
        if (!na.test(b)) return false;
        na.reset(b);
        nb.reset(a);
        return na == nb;
    }

    void search(std::vector<int> colors) {
        colors = refine(g, colors);
        int n = g.vertex_count();
        // first non-singleton colour class
        int target = -1;
        std::vector<int> cell;
        for (int c = 0; c < n && target == -1; ++c) {
            cell.clear();
            for (int v = 0; v < n; ++v)
                if (colors[v] == c) cell.push_back(v);
            if (cell.size() >= 2) target = c;
        }
        if (target == -1) {
            std::string s = leaf_string(g, colors, init_colors);
            if (!have_best || s < best) {
                best = std::move(s);
                best_perm = colors;
                have_best = true;
            }
            return;
        }
        // one representative per twin group
        std::vector<int> reps;
        for (int v : cell) {
            bool dup = false;
            for (int r : reps)
                if (twins(r, v)) {
                    dup = true;
                    break;
                }
            if (!dup) reps.push_back(v);
        }
        for (int v : reps) {
            std::vector<int> child = colors;
            for (int u = 0; u < n; ++u)
                if (child[u] > target) ++child[u];
            for (int u : cell)
                if (u != v) child[u] = target + 1;
            search(std::move(child));
        }
    }
};

std::pair<std::string, std::vector<int>> canonical_search(const Graph& g,
                                                          const std::vector<int>& init_colors) {
    if (g.vertex_count() == 0) return {graph6_encode(g), {}};
    std::vector<int> start(g.vertex_count(), 0);
    if (!init_colors.empty()) {
        if (static_cast<int>(init_colors.size()) != g.vertex_count())
            throw std::invalid_argument("colour vector size mismatch");
        start = init_colors;
    }
    CanonSearch s{g, init_colors};
    s.search(std::move(start));
    return {s.best, s.best_perm};
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
    return CanonicalCode{canonical_search(g, {}).first};
}

CanonicalCode canonical_code(const Graph& g, const std::vector<int>& colors) {
    return CanonicalCode{canonical_search(g, colors).first};
}

Graph canonical_form(const Graph& g) {
    auto [code, perm] = canonical_search(g, {});
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace chromaroot

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chromaroot::oracle {

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    int n = a.vertex_count();
    if (n > 9) throw std::invalid_argument("brute isomorphism capped at 9 vertices");
    std::vector<int> deg_a(n), deg_b(n);
    for (int v = 0; v < n; ++v) {
        deg_a[v] = a.degree(v);
        deg_b[v] = b.degree(v);
    }
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (deg_a[u] != deg_b[perm[u]]) {
                ok = false;
                break;
            }
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

void backtrack(const Graph& g, int t, int v, std::vector<int>& colour, BigInt& count) {
    if (v == g.vertex_count()) {
        ++count;
        return;
    }
    for (int c = 0; c < t; ++c) {
        bool ok = true;
        for (VertexId u : g.neighbors(v))
            if (u < v && colour[u] == c) {
                ok = false;
                break;
            }
        if (ok) {
            colour[v] = c;
            backtrack(g, t, v + 1, colour, count);
        }
    }
}

}  // namespace

BigInt count_colourings_backtrack(const Graph& g, int t) {
    if (t == 0) return g.vertex_count() == 0 ? 1 : 0;
    std::vector<int> colour(g.vertex_count(), -1);
    BigInt count = 0;
    backtrack(g, t, 0, colour, count);
    return count;
}

BigInt count_colourings_subset_ie(const Graph& g, int t) {
    // A proper t-colouring is an ordered t-tuple of disjoint independent
    // sets partitioning V. Tuples of independent subsets of W with sizes
    // summing to n can only be disjoint with union V, so
    //   #colourings = sum over W of (-1)^{n-|W|} [z^n] I_{G[W]}(z)^t,
    // where I_{G[W]}(z) counts independent subsets of G[W] by size.
    int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("subset oracle capped at 16 vertices");
    if (n == 0) return 1;
    std::size_t full = std::size_t(1) << n;
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (VertexId u : g.neighbors(v)) adj[v] |= std::uint32_t(1) << u;
    // ind[w][k]: independent subsets of G[w] of size k, via
    // I_w = I_{w - v} + z * I_{w - N[v] - v}
    std::vector<std::vector<BigInt>> ind(full);
    ind[0] = {BigInt(1)};
    for (std::size_t w = 1; w < full; ++w) {
        int v = std::countr_zero(w);
        std::size_t without = w & ~(std::size_t(1) << v);
        std::size_t without_nbhd = without & ~static_cast<std::size_t>(adj[v]);
        const auto& skip = ind[without];
        const auto& take = ind[without_nbhd];
        std::vector<BigInt> here(std::max(skip.size(), take.size() + 1), BigInt(0));
        for (std::size_t k = 0; k < skip.size(); ++k) here[k] += skip[k];
        for (std::size_t k = 0; k < take.size(); ++k) here[k + 1] += take[k];
        ind[w] = std::move(here);
    }
    BigInt total = 0;
    std::vector<BigInt> power;
    for (std::size_t w = 0; w < full; ++w) {
        // [z^n] ind[w]^t, truncating above degree n
        power.assign(1, BigInt(1));
        for (int rep = 0; rep < t; ++rep) {
            std::vector<BigInt> next(std::min<std::size_t>(power.size() + ind[w].size() - 1,
                                                           static_cast<std::size_t>(n + 1)),
                                     BigInt(0));
            for (std::size_t i = 0; i < power.size(); ++i) {
                if (power[i] == 0) continue;
                for (std::size_t j = 0; j < ind[w].size() && i + j <= static_cast<std::size_t>(n);
                     ++j)
                    next[i + j] += power[i] * ind[w][j];
            }
            power = std::move(next);
        }
        if (power.size() <= static_cast<std::size_t>(n)) continue;
        int missing = n - std::popcount(static_cast<std::uint64_t>(w));
        if (missing % 2 == 0)
            total += power[n];
        else
            total -= power[n];
    }
    return total;
}

BigInt count_colourings(const Graph& g, int t) {
    double cost = std::pow(static_cast<double>(std::max(t, 1)), g.vertex_count());
    if (cost <= 2e6) return count_colourings_backtrack(g, t);
    return count_colourings_subset_ie(g, t);
}

IntPoly interpolate_through_integer_points(const std::vector<BigInt>& values) {
    // Newton forward differences on the integer grid 0..n
    int n = static_cast<int>(values.size()) - 1;
    std::vector<std::vector<BigInt>> diff(values.size());
    diff[0].assign(values.begin(), values.end());
    for (int k = 1; k <= n; ++k) {
        diff[k].resize(n - k + 1);
        for (int i = 0; i <= n - k; ++i) diff[k][i] = diff[k - 1][i + 1] - diff[k - 1][i];
    }
    // p(t) = sum_k diff[k][0]/k! * t(t-1)...(t-k+1)
    std::vector<Rational> coeffs(values.size(), Rational(0));
    std::vector<Rational> falling{Rational(1)};  // product so far
    BigInt factorial = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            factorial *= k;
            // multiply falling by (t - (k-1))
            std::vector<Rational> next(falling.size() + 1, Rational(0));
            for (std::size_t i = 0; i < falling.size(); ++i) {
                next[i + 1] += falling[i];
                next[i] -= falling[i] * Rational(k - 1);
            }
            falling = std::move(next);
        }
        Rational scale = Rational(diff[k][0]) / Rational(factorial);
        for (std::size_t i = 0; i < falling.size(); ++i) coeffs[i] += scale * falling[i];
    }
    std::vector<BigInt> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (c.get_den() != 1) throw std::logic_error("interpolation gave fractional coefficients");
        out.push_back(c.get_num());
    }
    return IntPoly{std::move(out)};
}

IntPoly brute_chromatic(const Graph& g) {
    int n = g.vertex_count();
    std::vector<BigInt> values;
    values.reserve(n + 1);
    for (int t = 0; t <= n; ++t) values.push_back(count_colourings(g, t));
    return interpolate_through_integer_points(values);
}

std::vector<Graph> atlas(int n) {
    if (n <= 0) return {};
    std::vector<Graph> current{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& g : current) {
            int base = g.vertex_count();
            for (std::uint32_t nbhd = 0; nbhd < (std::uint32_t(1) << base); ++nbhd) {
                Graph extended = g;
                int v = extended.add_vertex();
                for (int u = 0; u < base; ++u)
                    if ((nbhd >> u) & 1) extended.add_edge(u, v);
                Graph canon = canonical_form(extended);
                next.emplace(graph6_encode(canon), std::move(canon));
            }
        }
        current.clear();
        for (auto& [code, graph] : next) current.push_back(std::move(graph));
    }
    return current;
}

int sign_sampling_root_count(const IntPoly& p, const Rational& lo, const Rational& hi,
                             int grid_points) {
    int count = 0;
    int prev = 0;
    for (int k = 0; k <= grid_points; ++k) {
        Rational t = lo + (hi - lo) * Rational(k) / Rational(grid_points);
        int s = p.sign_at(t);
        if (s == 0) {
            ++count;  // exact hit
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

Graph random_graph(int n, double edge_probability, std::mt19937& rng) {
    std::bernoulli_distribution flip(edge_probability);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

IntPoly random_poly(int max_degree, long coeff_bound, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    int d = deg(rng);
    std::vector<BigInt> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = coeff(rng);
    if (c[d] == 0) c[d] = 1;
    return IntPoly{std::move(c)};
}

}  // namespace chromaroot::oracle

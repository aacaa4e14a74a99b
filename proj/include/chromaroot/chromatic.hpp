#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromaroot/graph.hpp"
#include "chromaroot/poly.hpp"

namespace chromaroot {

// Shared memo from canonical code to chromatic polynomial. Concurrent
// get-or-insert; values for a given code are identical by construction, so
// last-writer-wins races are benign.
class MemoStore {
public:
    std::optional<IntPoly> find(const std::string& code) const;
    void insert(const std::string& code, const IntPoly& poly);
    std::size_t size() const;
    void clear();

    // Persistent form: JSON map from canonical graph6 code to coefficient
    // strings (ascending degree).
    void load_file(const std::string& path);
    void save_file(const std::string& path) const;

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, IntPoly> map_;
};

MemoStore& global_chromatic_memo();

struct ChromoResult {
    IntPoly poly;  // P(G, t)
    int n;         // vertex count; Q(G, t) = (-1)^n P(G, t)
};

// Exact chromatic polynomial. Factors at connected components, cut
// vertices and adjacent 2-cuts; otherwise deletion-contraction on the
// lexicographically smallest edge of maximal degree sum; memoised by
// canonical code.
IntPoly chromatic_polynomial(const Graph& g, MemoStore& memo = global_chromatic_memo());
ChromoResult chromatic(const Graph& g, MemoStore& memo = global_chromatic_memo());

// Q(G, t) = (-1)^{|V|} P(G, t).
Rational q_eval(const Graph& g, const Rational& t, MemoStore& memo = global_chromatic_memo());
Rational q_of(const IntPoly& p, int n, const Rational& t);

// Smallest real root of P(G,t) / (t (t-1)) in (1, 2], when any. Roots
// strictly inside (1, 2) and a root exactly at 2 are distinguished by the
// flag; `none` means no root in (1, 2] at all.
struct NontrivialRoot {
    RootInterval interval;
    bool exactly_two = false;
};
std::optional<NontrivialRoot> smallest_nontrivial_root(const Graph& g,
                                                       MemoStore& memo = global_chromatic_memo());

// Exact check of the 2-cut reduction identity
//   t(t-1)Q(G) = tQ(G1+uv)Q(G2+uv)
//                + (t-1)[Q(G1)Q(G2) - Q(G1+uv)Q(G2) - Q(G1)Q(G2+uv)]
// where side1/side2 are the vertex sets of G1/G2 (host ids). Preconditions
// are validated and violations throw with the failed clause named.
bool jackson_reduction_check(const Graph& g, const std::vector<VertexId>& side1,
                             const std::vector<VertexId>& side2, VertexId u, VertexId v,
                             const Rational& t, MemoStore& memo = global_chromatic_memo());

}  // namespace chromaroot

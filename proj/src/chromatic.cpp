#include "chromaroot/chromatic.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace chromaroot {

std::optional<IntPoly> MemoStore::find(const std::string& code) const {
    std::lock_guard lock(mu_);
    auto it = map_.find(code);
    if (it == map_.end()) return std::nullopt;
    return it->second;  // copied under the lock
}

void MemoStore::insert(const std::string& code, const IntPoly& poly) {
    std::lock_guard lock(mu_);
    map_[code] = poly;
}

std::size_t MemoStore::size() const {
    std::lock_guard lock(mu_);
    return map_.size();
}

void MemoStore::clear() {
    std::lock_guard lock(mu_);
    map_.clear();
}

void MemoStore::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // missing cache is not an error
    nlohmann::json j;
    in >> j;
    if (!j.is_object() || j.value("version", 0) != 1) return;
    std::lock_guard lock(mu_);
    for (auto& [code, coeffs] : j.at("entries").items()) {
        std::vector<BigInt> c;
        for (const auto& s : coeffs) c.emplace_back(s.get<std::string>());
        map_[code] = IntPoly{std::move(c)};
    }
}

void MemoStore::save_file(const std::string& path) const {
    nlohmann::json entries = nlohmann::json::object();
    {
        std::lock_guard lock(mu_);
        for (const auto& [code, poly] : map_) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : poly.coeffs()) coeffs.push_back(c.get_str());
            entries[code] = std::move(coeffs);
        }
    }
    nlohmann::json j{{"version", 1}, {"entries", std::move(entries)}};
    std::ofstream out(path);
    out << j.dump() << '\n';
}

MemoStore& global_chromatic_memo() {
    static MemoStore store;
    return store;
}

namespace {

// Smallest articulation vertex, if any (graph assumed connected).
std::optional<VertexId> first_cut_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.components_excluding(VSet::single(v)).size() > 1) return v;
    return std::nullopt;
}

// Lexicographically smallest adjacent separating pair.
std::optional<CutPair> first_adjacent_two_cut(const Graph& g) {
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!g.has_edge(x, y)) continue;
            VSet pair = VSet::single(x);
            pair.set(y);
            if (g.components_excluding(pair).size() > 1) return CutPair{x, y};
        }
    return std::nullopt;
}

std::pair<VertexId, VertexId> deletion_contraction_edge(const Graph& g) {
    int best_sum = -1;
    std::pair<VertexId, VertexId> best{-1, -1};
    for (auto [u, v] : g.edges()) {
        int sum = g.degree(u) + g.degree(v);
        if (sum > best_sum) {
            best_sum = sum;
            best = {u, v};
        }
    }
    return best;
}

IntPoly compute(const Graph& g, MemoStore& memo);

IntPoly compute_inner(const Graph& g, MemoStore& memo) {
    auto comps = g.components();
    if (comps.size() > 1) {
        IntPoly product = IntPoly::one();
        for (const auto& comp : comps) product = product * compute(g.induced(comp), memo);
        return product;
    }
    if (auto v = first_cut_vertex(g)) {
        auto parts = g.components_excluding(VSet::single(*v));
        IntPoly product = IntPoly::one();
        for (const auto& part : parts) {
            VSet keep = part;
            keep.set(*v);
            product = product * compute(g.induced(keep), memo);
        }
        IntPoly divisor = IntPoly::one();
        for (std::size_t i = 1; i < parts.size(); ++i) divisor = divisor * IntPoly::t();
        return product.divide_exact(divisor);
    }
    if (auto cut = first_adjacent_two_cut(g)) {
        VSet pair = VSet::single(cut->x);
        pair.set(cut->y);
        auto parts = g.components_excluding(pair);
        IntPoly product = IntPoly::one();
        for (const auto& part : parts) {
            VSet keep = part | pair;
            product = product * compute(g.induced(keep), memo);
        }
        IntPoly k2 = IntPoly::t() * (IntPoly::t() - IntPoly::one());  // t(t-1)
        IntPoly divisor = IntPoly::one();
        for (std::size_t i = 1; i < parts.size(); ++i) divisor = divisor * k2;
        return product.divide_exact(divisor);
    }
    auto [u, v] = deletion_contraction_edge(g);
    return compute(g.without_edge(u, v), memo) - compute(g.contracted(u, v), memo);
}

IntPoly compute(const Graph& g, MemoStore& memo) {
    int n = g.vertex_count();
    if (n == 0) return IntPoly::one();
    if (n == 1) return IntPoly::t();
    std::string code = canonical_code(g).bytes;
    if (auto hit = memo.find(code)) return *hit;
    IntPoly result = compute_inner(g, memo);
    memo.insert(code, result);
    return result;
}

}  // namespace

IntPoly chromatic_polynomial(const Graph& g, MemoStore& memo) { return compute(g, memo); }

ChromoResult chromatic(const Graph& g, MemoStore& memo) {
    return ChromoResult{compute(g, memo), g.vertex_count()};
}

Rational q_of(const IntPoly& p, int n, const Rational& t) {
    Rational value = p(t);
    return (n % 2 == 0) ? value : Rational(-value);
}

Rational q_eval(const Graph& g, const Rational& t, MemoStore& memo) {
    return q_of(chromatic_polynomial(g, memo), g.vertex_count(), t);
}

std::optional<NontrivialRoot> smallest_nontrivial_root(const Graph& g, MemoStore& memo) {
    ConnectivityLevel level = connectivity_level(g);
    if (level != ConnectivityLevel::two && level != ConnectivityLevel::three_plus)
        throw std::invalid_argument("requires 2-connected graph");
    IntPoly p = chromatic_polynomial(g, memo);
    IntPoly reduced = p.divide_exact(IntPoly::t())
                          .divide_exact(IntPoly::t() - IntPoly::one());
    auto roots = isolate_roots(reduced, Rational(1), Rational(2));
    if (!roots.empty()) return NontrivialRoot{roots.front(), false};
    if (reduced.sign_at(Rational(2)) == 0) {
        IntPoly sf = reduced.squarefree_part();
        SturmChain chain(sf);
        Rational delta(1, 1024);
        while (true) {
            Rational a = 2 - delta;
            Rational b = 2 + delta;
            int sa = sf.sign_at(a);
            int sb = sf.sign_at(b);
            if (sa != 0 && sb != 0 && sa != sb && chain.count(a, b) == 1)
                return NontrivialRoot{RootInterval{sf, a, b, true}, true};
            delta /= 2;
        }
    }
    return std::nullopt;
}

bool jackson_reduction_check(const Graph& g, const std::vector<VertexId>& side1,
                             const std::vector<VertexId>& side2, VertexId u, VertexId v,
                             const Rational& t, MemoStore& memo) {
    VSet s1, s2;
    for (VertexId w : side1) s1.set(w);
    for (VertexId w : side2) s2.set(w);
    VSet shared = s1 & s2;
    VSet uv = VSet::single(u);
    uv.set(v);
    if ((s1 | s2) != g.vertices_mask())
        throw std::invalid_argument("precondition failed: sides must cover the graph");
    if (shared != uv)
        throw std::invalid_argument("precondition failed: sides must intersect exactly in {u,v}");
    if (g.has_edge(u, v))
        throw std::invalid_argument("precondition failed: uv must not be an edge");
    if (s1.count() < 3 || s2.count() < 3)
        throw std::invalid_argument("precondition failed: each side needs at least 3 vertices");
    for (auto [a, b] : g.edges())
        if (!((s1.test(a) && s1.test(b)) || (s2.test(a) && s2.test(b))))
            throw std::invalid_argument("precondition failed: an edge crosses the two sides");

    std::vector<VertexId> ids1, ids2;
    Graph g1 = g.induced(s1, &ids1);
    Graph g2 = g.induced(s2, &ids2);
    auto local = [](const std::vector<VertexId>& ids, VertexId host) {
        return static_cast<VertexId>(std::find(ids.begin(), ids.end(), host) - ids.begin());
    };
    Graph g1p = g1.with_edge(local(ids1, u), local(ids1, v));
    Graph g2p = g2.with_edge(local(ids2, u), local(ids2, v));

    Rational qg = q_eval(g, t, memo);
    Rational q1 = q_eval(g1, t, memo);
    Rational q2 = q_eval(g2, t, memo);
    Rational q1p = q_eval(g1p, t, memo);
    Rational q2p = q_eval(g2p, t, memo);

    Rational lhs = t * (t - 1) * qg;
    Rational rhs = t * q1p * q2p + (t - 1) * (q1 * q2 - q1p * q2 - q1 * q2p);
    return lhs == rhs;
}

}  // namespace chromaroot

#include "chromaroot/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chromaroot/parallel.hpp"

namespace chromaroot {

namespace {

Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational power_of_ten_inverse(int k) {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return Rational(BigInt(1), den);
}

const Rational& root_refinement_width() {
    static const Rational w = power_of_ten_inverse(12);
    return w;
}

RootInterval isolate_unique(const IntPoly& p, const Rational& lo, const Rational& hi) {
    auto roots = isolate_roots(p, lo, hi);
    if (roots.size() != 1) throw std::logic_error("expected a unique root in the interval");
    return refine(roots.front(), root_refinement_width());
}

}  // namespace

nlohmann::json rational_json(const Rational& x) {
    return nlohmann::json{{"exact", x.get_str()}, {"decimal", decimal_string(x, 12)}};
}

nlohmann::json interval_json(const RootInterval& r) {
    return nlohmann::json{{"lo", rational_json(r.lo)},
                          {"hi", rational_json(r.hi)},
                          {"poly", r.poly.to_string()}};
}

TGrid TGrid::dyadic(const Rational& lo, const Rational& hi, int min_samples) {
    if (!(lo < hi)) throw std::invalid_argument("grid interval endpoints out of order");
    TGrid grid{lo, hi, {}};
    Rational step = ratio(1, 64);
    while (true) {
        grid.samples.clear();
        for (Rational t = lo + step; t < hi; t += step) grid.samples.push_back(t);
        if (static_cast<int>(grid.samples.size()) + 1 >= min_samples) break;
        step /= 2;
    }
    grid.samples.push_back(hi);
    return grid;
}

ConstantsTable certify_constants() {
    ConstantsTable table;
    table.q = isolate_unique(IntPoly::descending({1, -4, 4, -4, 4}), Rational(1), Rational(2));
    table.t0 = isolate_unique(IntPoly::descending({1, -2, 4, -4}), Rational(-100), Rational(100));
    {
        IntPoly sextic = IntPoly::descending({1, -8, 27, -56, 82, -76, 31});
        auto roots = isolate_roots(sextic, Rational(-100), Rational(100));
        if (roots.empty()) throw std::logic_error("reference sextic has no real roots");
        table.t1 = refine(roots.front(), root_refinement_width());
    }
    table.k23_root =
        isolate_unique(IntPoly::descending({1, -5, 10, -7}), Rational(1), Rational(2));
    table.thirty_two_over_27 = ratio(32, 27);
    table.five_quarters = ratio(5, 4);
    table.q_lower = table.q.lo;  // sign(poly(lo)) != 0, so q_lower < q strictly
    const Rational& s = table.q_lower;
    table.gamma = (s - 2) * (s * s - 2 * s - 2) / 4;
    table.alpha = (1 - table.gamma) * (2 - s) / (2 - s - table.gamma);
    table.beta = 1 - 1 / table.alpha;
    return table;
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

long Report::total_instances() const {
    long total = 0;
    for (const auto& c : checks) total += c.instances;
    return total;
}

nlohmann::json Report::to_json() const {
    nlohmann::json jchecks = nlohmann::json::array();
    long failed = 0;
    for (const auto& c : checks) {
        jchecks.push_back(nlohmann::json{{"name", c.name},
                                         {"passed", c.passed},
                                         {"instances", c.instances},
                                         {"details", c.details},
                                         {"witnesses", c.witnesses}});
        if (!c.passed) ++failed;
    }
    return nlohmann::json{{"command", command},
                          {"meta", meta},
                          {"checks", jchecks},
                          {"summary",
                           {{"checks", checks.size()},
                            {"failed", failed},
                            {"all_passed", failed == 0}}}};
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "check,passed,instances,witnesses\n";
    for (const auto& c : checks)
        out << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << c.instances << ','
            << c.witnesses.size() << '\n';
    return out.str();
}

namespace {

// |x - target| <= 1/2000, i.e. x prints as `target` at three decimals.
bool rounds_to_3dp(const Rational& x, long thousandths) {
    Rational target = ratio(thousandths, 1000);
    Rational tol = ratio(1, 2000);
    return x >= target - tol && x <= target + tol;
}

bool interval_within_3dp(const RootInterval& r, long thousandths, long tol_num, long tol_den) {
    Rational target = ratio(thousandths, 1000);
    Rational tol = ratio(tol_num, tol_den);
    return r.lo >= target - tol && r.hi <= target + tol;
}

void add_check(Report& report, CheckResult check) { report.checks.push_back(std::move(check)); }

}  // namespace

Report check_constants_inequalities(const TGrid& grid, const ConstantsTable& table) {
    if (grid.lo < 1 || grid.hi > table.q_lower)
        throw std::invalid_argument("grid exceeds (1, q-]");
    Report report;
    report.command = "constants-inequalities";
    report.meta = {{"samples", grid.samples.size()}};
    const Rational& g = table.gamma;
    const Rational& a = table.alpha;
    const Rational& b = table.beta;
    auto lhs1 = [&](const Rational& t) -> Rational { return t / (t - 1) * g * g - 2 * g + 1; };
    auto lhs2 = [&](const Rational& t) -> Rational { return (1 - t) / g + 1; };
    auto lhs3 = [&](const Rational& t) -> Rational { return (1 - g) * (2 - t) * b - (t - 1) * g; };

    CheckResult holds{"constants.inequalities_hold"};
    CheckResult decreasing{"constants.inequalities_monotone_decreasing"};
    bool first = true;
    Rational prev1, prev2, prev3;
    for (const Rational& t : grid.samples) {
        Rational v1 = lhs1(t), v2 = lhs2(t), v3 = lhs3(t);
        holds.instances += 3;
        if (!(v1 >= a && v2 >= b && v3 >= 0)) {
            holds.passed = false;
            holds.witnesses.push_back(nlohmann::json{{"t", t.get_str()}});
        }
        if (!first) {
            decreasing.instances += 3;
            if (!(v1 <= prev1 && v2 <= prev2 && v3 <= prev3)) {
                decreasing.passed = false;
                decreasing.witnesses.push_back(nlohmann::json{{"t", t.get_str()}});
            }
        }
        prev1 = v1;
        prev2 = v2;
        prev3 = v3;
        first = false;
    }
    add_check(report, std::move(holds));
    add_check(report, std::move(decreasing));
    return report;
}

Report constants_report(int grid_min_samples) {
    ConstantsTable table = certify_constants();
    Report report;
    report.command = "constants";
    report.meta = {{"refinement_width", "1e-12"}};

    CheckResult prints{"constants.reference_values"};
    prints.instances = 7;
    bool ok = interval_within_3dp(table.t0, 1296, 1, 2000) &&
              interval_within_3dp(table.q, 1225, 1, 2000) &&
              interval_within_3dp(table.t1, 1290, 1, 2000) &&
              interval_within_3dp(table.k23_root, 1430, 5, 1000) &&
              rounds_to_3dp(table.gamma, 571) && rounds_to_3dp(table.alpha, 1632) &&
              rounds_to_3dp(table.beta, 387);
    prints.passed = ok;
    prints.details = {{"q", interval_json(table.q)},
                      {"t0", interval_json(table.t0)},
                      {"t1", interval_json(table.t1)},
                      {"k23_root", interval_json(table.k23_root)},
                      {"q_lower", rational_json(table.q_lower)},
                      {"gamma", rational_json(table.gamma)},
                      {"alpha", rational_json(table.alpha)},
                      {"beta", rational_json(table.beta)}};
    add_check(report, std::move(prints));

    CheckResult ordering{"constants.ordering_chain"};
    ordering.instances = 5;
    ordering.passed = compare_root_to(table.q, table.thirty_two_over_27) > 0 &&
                      compare_root_to(table.q, table.five_quarters) < 0 &&
                      compare_root_to(table.t1, table.five_quarters) > 0 &&
                      compare_roots(table.t1, table.t0) < 0 &&
                      compare_roots(table.t0, table.k23_root) < 0;
    add_check(report, std::move(ordering));

    TGrid grid = TGrid::dyadic(Rational(1), table.q_lower, grid_min_samples);
    Report ineq = check_constants_inequalities(grid, table);
    for (auto& c : ineq.checks) report.checks.push_back(std::move(c));
    return report;
}

namespace {

struct MemberBatch {
    std::vector<nlohmann::json> witnesses;
    long instances = 0;
    bool passed = true;

    void violation(nlohmann::json w) {
        passed = false;
        if (witnesses.size() < 32) witnesses.push_back(std::move(w));
    }
};

// Positivity / bound sweep helpers: every clause is evaluated exactly at
// every grid sample.
void sweep_positive(MemberBatch& batch, const std::string& graph_code, const char* clause,
                    const IntPoly& p, int n, const TGrid& grid) {
    for (const Rational& t : grid.samples) {
        ++batch.instances;
        if (!(q_of(p, n, t) > 0))
            batch.violation({{"graph6", graph_code}, {"clause", clause}, {"t", t.get_str()}});
    }
}

void sweep_bound(MemberBatch& batch, const std::string& graph_code, const char* clause,
                 const IntPoly& lhs_p, int lhs_n, const Rational& factor, const IntPoly& rhs_p,
                 int rhs_n, const TGrid& grid) {
    for (const Rational& t : grid.samples) {
        ++batch.instances;
        if (!(q_of(lhs_p, lhs_n, t) >= factor * q_of(rhs_p, rhs_n, t)))
            batch.violation({{"graph6", graph_code}, {"clause", clause}, {"t", t.get_str()}});
    }
}

std::vector<Graph> members_in_class(int n_max, ClassFilter filter, int jobs) {
    auto all = enumerate_gentri(n_max, jobs);
    std::vector<char> keep(all.size(), 0);
    parallel_over(all.size(), jobs, [&](std::size_t i) {
        const Graph& g = all[i];
        switch (filter) {
            case ClassFilter::all_K: keep[i] = 1; break;
            case ClassFilter::K1: keep[i] = in_K1(g); break;
            case ClassFilter::K2: keep[i] = in_K2(g); break;
            case ClassFilter::K1K2: keep[i] = in_K1K2(g); break;
            case ClassFilter::ham_path: keep[i] = hamiltonian_path(g).has_value(); break;
        }
    });
    std::vector<Graph> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (keep[i]) out.push_back(std::move(all[i]));
    return out;
}

}  // namespace

std::string to_string(ClassFilter f) {
    switch (f) {
        case ClassFilter::all_K: return "all_K";
        case ClassFilter::K1: return "K1";
        case ClassFilter::K2: return "K2";
        case ClassFilter::K1K2: return "K1K2";
        case ClassFilter::ham_path: return "ham_path";
    }
    return "?";
}

Report verify_K1_lemma(int n_max, const TGrid& grid, int jobs) {
    if (grid.lo < 1 || grid.hi > ratio(5, 4))
        throw std::invalid_argument("grid exceeds (1, 5/4]");
    std::vector<Graph> members = members_in_class(n_max, ClassFilter::K1, jobs);
    std::vector<MemberBatch> batches(members.size());
    parallel_over(members.size(), jobs, [&](std::size_t i) {
        const Graph& g = members[i];
        MemberBatch& batch = batches[i];
        std::string code = graph6_encode(g);
        int n = g.vertex_count();
        IntPoly pg = chromatic_polynomial(g);
        sweep_positive(batch, code, "e", pg, n, grid);
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) != 2) continue;
            auto nb = g.neighbors(v);
            for (VertexId u : nb) {
                Graph contracted = g.contracted(u, v);
                IntPoly pc = chromatic_polynomial(contracted);
                sweep_positive(batch, code, "c", pc, n - 1, grid);
                sweep_bound(batch, code, "a", pg, n, ratio(1, 2), pc, n - 1, grid);
            }
            Graph h = g.without_vertex(v);
            VertexId hu = nb[0] - (nb[0] > v ? 1 : 0);
            VertexId hw = nb[1] - (nb[1] > v ? 1 : 0);
            ++batch.instances;
            if (!is_generalised_edge(h, hu, hw)) {
                batch.violation({{"graph6", code}, {"clause", "hypothesis:gen-edge"},
                                 {"vertex", v}});
                continue;
            }
            ++batch.instances;
            if (!gen_edge_has_property(h, hu, hw, CutProperty::P1)) {
                batch.violation({{"graph6", code}, {"clause", "hypothesis:P1"}, {"vertex", v}});
                continue;
            }
            IntPoly ph = chromatic_polynomial(h);
            sweep_positive(batch, code, "d", ph, n - 1, grid);
            if (h.vertex_count() >= 4) {
                IntPoly php = chromatic_polynomial(h.with_edge(hu, hw));
                sweep_bound(batch, code, "b", php, n - 1, ratio(1, 2), ph, n - 1, grid);
            }
        }
    });
    Report report;
    report.command = "verify-K1";
    report.meta = {{"n_max", n_max},
                   {"members", members.size()},
                   {"samples", grid.samples.size()}};
    CheckResult all{"lemma_K1.clauses_a_to_e"};
    for (auto& batch : batches) {
        all.instances += batch.instances;
        if (!batch.passed) all.passed = false;
        for (auto& w : batch.witnesses)
            if (all.witnesses.size() < 32) all.witnesses.push_back(std::move(w));
    }
    add_check(report, std::move(all));
    return report;
}

namespace {

struct SideDecomposition {
    bool valid = false;
    std::string note;
    Graph g1, g2;
    VertexId t1a = -1, t1z = -1;  // terminals of g1: the a-side endpoint and z
    VertexId t2b = -1, t2z = -1;
};

// G - ab splits at a unique cut vertex z into a generalised (a,z)-edge and
// a generalised (b,z)-edge.
SideDecomposition decompose_at_edge(const Graph& g, VertexId a, VertexId b) {
    SideDecomposition d;
    Graph gm = g.without_edge(a, b);
    if (!gm.is_connected()) {
        d.note = "deleting the edge disconnected the graph";
        return d;
    }
    for (VertexId z : cut_vertices(gm)) {
        auto comps = gm.components_excluding(VSet::single(z));
        const VSet* side_a = nullptr;
        const VSet* side_b = nullptr;
        bool extra = false;
        for (const auto& comp : comps) {
            if (comp.test(a))
                side_a = &comp;
            else if (comp.test(b))
                side_b = &comp;
            else
                extra = true;
        }
        if (!side_a || !side_b || side_a == side_b) continue;
        if (extra) {
            d.note = "cut vertex leaves a third side";
            return d;
        }
        std::vector<VertexId> ids1, ids2;
        VSet keep1 = *side_a;
        keep1.set(z);
        VSet keep2 = *side_b;
        keep2.set(z);
        d.g1 = g.induced(keep1, &ids1);
        d.g2 = g.induced(keep2, &ids2);
        auto local = [](const std::vector<VertexId>& ids, VertexId host) {
            return static_cast<VertexId>(std::find(ids.begin(), ids.end(), host) - ids.begin());
        };
        d.t1a = local(ids1, a);
        d.t1z = local(ids1, z);
        d.t2b = local(ids2, b);
        d.t2z = local(ids2, z);
        d.valid = true;
        return d;
    }
    d.note = "no separating cut vertex after deleting the edge";
    return d;
}

}  // namespace

Report verify_K2_lemma(int n_max, const TGrid& grid, const ConstantsTable& table, int jobs) {
    if (grid.lo < 1 || grid.hi > table.q_lower)
        throw std::invalid_argument("grid exceeds (1, q-]");
    std::vector<Graph> members = members_in_class(n_max, ClassFilter::K2, jobs);
    std::vector<MemberBatch> batches(members.size());
    const Rational gamma = table.gamma;
    const Rational alpha = table.alpha;
    const Rational beta = table.beta;
    parallel_over(members.size(), jobs, [&](std::size_t i) {
        const Graph& g = members[i];
        MemberBatch& batch = batches[i];
        std::string code = graph6_encode(g);
        int n = g.vertex_count();
        IntPoly pg = chromatic_polynomial(g);
        sweep_positive(batch, code, "e", pg, n, grid);
        for (auto [a, b] : g.edges()) {
            SideDecomposition d = decompose_at_edge(g, a, b);
            ++batch.instances;
            if (!d.valid) {
                batch.violation({{"graph6", code}, {"clause", "hypothesis:decomposition"},
                                 {"edge", {a, b}}, {"note", d.note}});
                continue;
            }
            batch.instances += 2;
            if (!is_generalised_edge(d.g1, d.t1a, d.t1z) ||
                !is_generalised_edge(d.g2, d.t2b, d.t2z)) {
                batch.violation({{"graph6", code}, {"clause", "hypothesis:gen-edge"},
                                 {"edge", {a, b}}});
                continue;
            }
            bool p1 = gen_edge_has_property(d.g1, d.t1a, d.t1z, CutProperty::P2);
            bool p2 = gen_edge_has_property(d.g2, d.t2b, d.t2z, CutProperty::P2);
            int n1 = d.g1.vertex_count();
            int n2 = d.g2.vertex_count();
            IntPoly pg1 = chromatic_polynomial(d.g1);
            IntPoly pg2 = chromatic_polynomial(d.g2);
            if (p1) {
                sweep_positive(batch, code, "f", pg1, n1, grid);
                if (n1 >= 4)
                    sweep_bound(batch, code, "c",
                                chromatic_polynomial(d.g1.with_edge(d.t1a, d.t1z)), n1, gamma,
                                pg1, n1, grid);
            }
            if (p2) {
                sweep_positive(batch, code, "f", pg2, n2, grid);
                if (n2 >= 4)
                    sweep_bound(batch, code, "c",
                                chromatic_polynomial(d.g2.with_edge(d.t2b, d.t2z)), n2, gamma,
                                pg2, n2, grid);
            }
            if (p1 && p2) {
                Graph gq = g.contracted(a, b);
                IntPoly pq = chromatic_polynomial(gq);
                sweep_bound(batch, code, "b", pg, n, beta, pq, n - 1, grid);
                sweep_positive(batch, code, "d", pq, n - 1, grid);
                if (n1 >= 4 && n2 >= 4) {
                    for (const Rational& t : grid.samples) {
                        ++batch.instances;
                        Rational lhs = q_of(pq, n - 1, t);
                        Rational rhs = alpha / t * q_of(pg1, n1, t) * q_of(pg2, n2, t);
                        if (!(lhs >= rhs))
                            batch.violation({{"graph6", code}, {"clause", "a"},
                                             {"edge", {a, b}}, {"t", t.get_str()}});
                    }
                }
            }
        }
    });
    Report report;
    report.command = "verify-K2";
    report.meta = {{"n_max", n_max},
                   {"members", members.size()},
                   {"samples", grid.samples.size()}};
    CheckResult all{"lemma_K2.clauses_a_to_f"};
    for (auto& batch : batches) {
        all.instances += batch.instances;
        if (!batch.passed) all.passed = false;
        for (auto& w : batch.witnesses)
            if (all.witnesses.size() < 32) all.witnesses.push_back(std::move(w));
    }
    add_check(report, std::move(all));
    return report;
}

namespace {

struct Contribution {
    bool exact_two = false;   // "no root" counts as 2 exactly
    bool has_interval = false;
    NontrivialRoot root;
};

// -1 / 0 / +1 comparison of class contributions.
int compare_contributions(const Contribution& x, const Contribution& y) {
    if (!x.has_interval && !y.has_interval) return 0;
    if (!x.has_interval) return -compare_root_to(y.root.interval, Rational(2));
    if (!y.has_interval) return compare_root_to(x.root.interval, Rational(2));
    return compare_roots(x.root.interval, y.root.interval);
}

}  // namespace

Report omega_scan(ClassFilter filter, int n_max, int jobs) {
    ConstantsTable table = certify_constants();
    std::vector<Graph> members = members_in_class(n_max, filter, jobs);
    Report report;
    report.command = "omega";
    report.meta = {{"class", to_string(filter)}, {"n_max", n_max}};
    if (members.empty()) {
        CheckResult empty{"omega.no_members"};
        empty.passed = false;
        empty.details = {{"note", "no members"}};
        add_check(report, std::move(empty));
        return report;
    }
    std::vector<Contribution> contributions(members.size());
    parallel_over(members.size(), jobs, [&](std::size_t i) {
        auto root = smallest_nontrivial_root(members[i]);
        Contribution c;
        if (root) {
            c.has_interval = true;
            c.root = *root;
            c.root.interval = refine(c.root.interval, root_refinement_width());
            c.exact_two = root->exactly_two;
        } else {
            c.exact_two = true;
        }
        contributions[i] = std::move(c);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        if (compare_contributions(contributions[i], contributions[best]) < 0) best = i;

    Rational limit;
    std::string limit_name;
    switch (filter) {
        case ClassFilter::all_K:
            limit = table.thirty_two_over_27;
            limit_name = "32/27";
            break;
        case ClassFilter::K1:
            limit = table.five_quarters;
            limit_name = "5/4";
            break;
        case ClassFilter::K2:
            limit = table.q_lower;
            limit_name = "q_lower";
            break;
        case ClassFilter::K1K2:
        case ClassFilter::ham_path:
            limit = table.t0.lo;
            limit_name = "t0_lower";
            break;
    }
    const Contribution& min_c = contributions[best];
    CheckResult check{"omega." + to_string(filter) + "_above_limit"};
    check.instances = static_cast<long>(members.size());
    Rational min_lower = min_c.has_interval ? min_c.root.interval.lo : Rational(2);
    if (min_c.has_interval)
        check.passed = compare_root_to(min_c.root.interval, limit) > 0;
    else
        check.passed = Rational(2) > limit;
    check.details = {{"minimiser", graph6_encode(members[best])},
                     {"minimum_exactly_two", min_c.exact_two && !min_c.has_interval},
                     {"limit", limit_name},
                     {"limit_value", rational_json(limit)},
                     {"gap_lower_bound", rational_json(min_lower - limit)}};
    if (min_c.has_interval) {
        check.details["minimum"] = interval_json(min_c.root.interval);
        check.details["minimum_at_two"] = min_c.root.exactly_two;
    }
    add_check(report, std::move(check));
    return report;
}

Report crosscheck_forbidden_minors(int n_max, int jobs) {
    auto members = enumerate_gentri(n_max, jobs);
    FixedGraphs fixed = fixed_graphs();
    std::string code_h0 = graph6_encode(canonical_form(fixed.h0));
    std::string code_h1 = graph6_encode(canonical_form(fixed.h1));
    std::string code_h2 = graph6_encode(canonical_form(fixed.h2));

    struct Row {
        bool k1 = false, k2 = false, minor_h0 = false, minor_h12 = false;
        bool k1_minimal_obstruction = false, k2_minimal_obstruction = false;
    };
    std::vector<Row> rows(members.size());
    parallel_over(members.size(), jobs, [&](std::size_t i) {
        const Graph& g = members[i];
        Row& row = rows[i];
        row.k1 = in_K1(g);
        row.k2 = in_K2(g);
        row.minor_h0 = poset_minor(fixed.h0, g);
        row.minor_h12 = poset_minor(fixed.h1, g) || poset_minor(fixed.h2, g);
        if (!row.k1 || !row.k2) {
            bool parents_k1 = true, parents_k2 = true;
            for (auto& [parent, cut] : reverse_steps(g)) {
                (void)cut;
                if (!in_K1(parent)) parents_k1 = false;
                if (!in_K2(parent)) parents_k2 = false;
            }
            row.k1_minimal_obstruction = !row.k1 && parents_k1;
            row.k2_minimal_obstruction = !row.k2 && parents_k2;
        }
    });

    Report report;
    report.command = "forbidden-minors";
    report.meta = {{"n_max", n_max}, {"members", members.size()}};

    CheckResult equiv_k1{"forbidden.K1_iff_H0_free"};
    CheckResult equiv_k2{"forbidden.K2_iff_H1H2_free"};
    std::set<std::string> min_k1, min_k2;
    for (std::size_t i = 0; i < members.size(); ++i) {
        ++equiv_k1.instances;
        if (rows[i].k1 != !rows[i].minor_h0) {
            equiv_k1.passed = false;
            equiv_k1.witnesses.push_back(graph6_encode(members[i]));
        }
        ++equiv_k2.instances;
        if (rows[i].k2 != !rows[i].minor_h12) {
            equiv_k2.passed = false;
            equiv_k2.witnesses.push_back(graph6_encode(members[i]));
        }
        if (rows[i].k1_minimal_obstruction) min_k1.insert(graph6_encode(members[i]));
        if (rows[i].k2_minimal_obstruction) min_k2.insert(graph6_encode(members[i]));
    }
    add_check(report, std::move(equiv_k1));
    add_check(report, std::move(equiv_k2));

    CheckResult minimal{"forbidden.minimal_obstructions"};
    minimal.instances = static_cast<long>(members.size());
    std::set<std::string> expect_k1, expect_k2;
    if (n_max >= 9) expect_k1.insert(code_h0);
    if (n_max >= 11) {
        expect_k2.insert(code_h1);
        expect_k2.insert(code_h2);
    }
    minimal.passed = (min_k1 == expect_k1) && (min_k2 == expect_k2);
    minimal.details = {{"K1_obstructions", nlohmann::json(min_k1)},
                       {"K2_obstructions", nlohmann::json(min_k2)},
                       {"H0", code_h0},
                       {"H1", code_h1},
                       {"H2", code_h2}};
    add_check(report, std::move(minimal));
    return report;
}

Report minor_order_equivalence(int n_max, int jobs) {
    auto members = enumerate_gentri(n_max, jobs);
    std::size_t count = members.size();
    std::vector<char> ok(count * count, 1);
    parallel_over(count * count, jobs, [&](std::size_t idx) {
        std::size_t hi = idx / count;
        std::size_t gi = idx % count;
        bool via_poset = poset_minor(members[hi], members[gi]);
        bool via_branch_sets = brute_minor(members[hi], members[gi]);
        ok[idx] = via_poset == via_branch_sets;
    });
    Report report;
    report.command = "minor-equivalence";
    report.meta = {{"n_max", n_max}, {"members", count}};
    CheckResult check{"minor.poset_equals_branch_sets"};
    check.instances = static_cast<long>(count * count);
    for (std::size_t idx = 0; idx < ok.size(); ++idx)
        if (!ok[idx]) {
            check.passed = false;
            check.witnesses.push_back(nlohmann::json{
                {"h", graph6_encode(members[idx / count])},
                {"g", graph6_encode(members[idx % count])}});
        }
    add_check(report, std::move(check));
    return report;
}

Report structural_checks(int n_max, int jobs) {
    auto members = enumerate_gentri(n_max, jobs);
    Report report;
    report.command = "structural";
    report.meta = {{"n_max", n_max}, {"members", members.size()}};

    struct Row {
        long switches = 0;
        bool switch_ok = true;
        bool k1k2 = false;
        bool ham = false;
        bool hamform_ok = true;
        std::vector<nlohmann::json> witnesses;
    };
    std::vector<Row> rows(members.size());
    parallel_over(members.size(), jobs, [&](std::size_t i) {
        const Graph& g = members[i];
        Row& row = rows[i];
        std::string code = graph6_encode(g);
        IntPoly pg = chromatic_polynomial(g);
        if (g.vertex_count() > 3) {
            for (const auto& cut : two_cuts(g)) {
                VSet pair = VSet::single(cut.x);
                pair.set(cut.y);
                for (const auto& comp : g.components_excluding(pair)) {
                    SwitchStep step{cut, comp};
                    Graph switched = whitney_switch(g, step);
                    ++row.switches;
                    if (!(chromatic_polynomial(switched) == pg)) {
                        row.switch_ok = false;
                        row.witnesses.push_back(nlohmann::json{
                            {"graph6", code}, {"cut", {cut.x, cut.y}}});
                    }
                }
            }
        }
        row.k1k2 = in_K1K2(g);
        row.ham = hamiltonian_path(g).has_value();
        if (row.k1k2) {
            try {
                auto [switched, steps] = to_ham_form(g);
                bool ham_after = hamiltonian_path(switched).has_value();
                bool same_poly = chromatic_polynomial(switched) == pg;
                if (!ham_after || !same_poly) {
                    row.hamform_ok = false;
                    row.witnesses.push_back(nlohmann::json{{"graph6", code},
                                                           {"ham_after", ham_after},
                                                           {"same_poly", same_poly}});
                }
            } catch (const std::exception& e) {
                row.hamform_ok = false;
                row.witnesses.push_back(nlohmann::json{{"graph6", code}, {"error", e.what()}});
            }
        }
    });

    CheckResult whitney{"structural.whitney_switch_preserves_polynomial"};
    CheckResult hamform{"structural.to_ham_form_round_trip"};
    CheckResult containment{"structural.ham_path_members_lie_in_K1K2"};
    for (std::size_t i = 0; i < members.size(); ++i) {
        Row& row = rows[i];
        whitney.instances += row.switches;
        if (!row.switch_ok) whitney.passed = false;
        if (row.k1k2) {
            ++hamform.instances;
            if (!row.hamform_ok) hamform.passed = false;
        }
        ++containment.instances;
        if (row.ham && !row.k1k2) {
            containment.passed = false;
            containment.witnesses.push_back(graph6_encode(members[i]));
        }
        for (auto& w : row.witnesses) {
            if (whitney.witnesses.size() < 32) whitney.witnesses.push_back(w);
        }
    }
    add_check(report, std::move(whitney));
    add_check(report, std::move(hamform));
    add_check(report, std::move(containment));
    return report;
}

Report j_sequence_monotonicity(int i_max, const ConstantsTable& table, int jobs) {
    Report report;
    report.command = "j-sequences";
    report.meta = {{"i_max", i_max}};
    struct SeqResult {
        std::vector<NontrivialRoot> roots;
        std::vector<std::string> decimals;
    };
    SeqResult seqs[2];
    seqs[0].roots.resize(i_max + 1);
    seqs[1].roots.resize(i_max + 1);
    parallel_over(2 * static_cast<std::size_t>(i_max + 1), jobs, [&](std::size_t idx) {
        int which = static_cast<int>(idx) / (i_max + 1);
        int i = static_cast<int>(idx) % (i_max + 1);
        Graph g = which == 0 ? j_sequence_k1(i) : j_sequence_k2(i).graph;
        auto root = smallest_nontrivial_root(g);
        if (!root) throw std::logic_error("J-sequence member lost its nontrivial root");
        root->interval = refine(root->interval, root_refinement_width());
        seqs[which].roots[i] = *root;
    });
    for (int which = 0; which < 2; ++which) {
        const char* name = which == 0 ? "K1" : "K2";
        CheckResult mono{std::string("jseq.") + name + "_roots_strictly_decreasing"};
        CheckResult bound{std::string("jseq.") + name + "_roots_above_class_limit"};
        const Rational& limit = which == 0 ? table.five_quarters : table.q_lower;
        nlohmann::json root_list = nlohmann::json::array();
        for (int i = 0; i <= i_max; ++i) {
            const auto& r = seqs[which].roots[i];
            root_list.push_back(interval_json(r.interval));
            ++bound.instances;
            if (!(compare_root_to(r.interval, limit) > 0)) {
                bound.passed = false;
                bound.witnesses.push_back(nlohmann::json{{"i", i}});
            }
            if (i > 0) {
                ++mono.instances;
                if (!(compare_roots(seqs[which].roots[i].interval,
                                    seqs[which].roots[i - 1].interval) < 0)) {
                    mono.passed = false;
                    mono.witnesses.push_back(nlohmann::json{{"i", i}});
                }
            }
        }
        mono.details = {{"roots", root_list}};
        add_check(report, std::move(mono));
        add_check(report, std::move(bound));
    }
    return report;
}

Report run_verify_suite(const VerifyOptions& options) {
    ConstantsTable table = certify_constants();
    Report merged;
    merged.command = "verify";
    merged.meta = {{"lemma_n_max", options.lemma_n_max},
                   {"minor_cross_n_max", options.minor_cross_n_max},
                   {"forbidden_n_max", options.forbidden_n_max},
                   {"omega_n_max", options.omega_n_max},
                   {"structural_n_max", options.structural_n_max},
                   {"jseq_i_max", options.jseq_i_max},
                   {"grid_min_samples", options.grid_min_samples}};
    auto absorb = [&merged](Report&& r) {
        for (auto& c : r.checks) merged.checks.push_back(std::move(c));
    };
    absorb(constants_report(options.grid_min_samples));
    TGrid k1_grid = TGrid::dyadic(Rational(1), ratio(5, 4), options.grid_min_samples);
    absorb(verify_K1_lemma(options.lemma_n_max, k1_grid, options.jobs));
    TGrid k2_grid = TGrid::dyadic(Rational(1), table.q_lower, options.grid_min_samples);
    absorb(verify_K2_lemma(options.lemma_n_max, k2_grid, table, options.jobs));
    absorb(minor_order_equivalence(options.minor_cross_n_max, options.jobs));
    absorb(crosscheck_forbidden_minors(options.forbidden_n_max, options.jobs));
    for (ClassFilter f :
         {ClassFilter::all_K, ClassFilter::K1, ClassFilter::K2, ClassFilter::K1K2,
          ClassFilter::ham_path})
        absorb(omega_scan(f, options.omega_n_max, options.jobs));
    absorb(structural_checks(options.structural_n_max, options.jobs));
    absorb(j_sequence_monotonicity(options.jseq_i_max, table, options.jobs));
    return merged;
}

std::string constants_svg(const ConstantsTable& table) {
    // number line from 1.15 to 1.50; display only
    auto x_of = [](double value) { return 40.0 + (value - 1.15) * 2000.0; };
    struct Mark {
        double value;
        const char* label;
    };
    Mark marks[] = {{32.0 / 27.0, "32/27"},
                    {mpq_get_d(table.q.lo.get_mpq_t()), "q"},
                    {1.25, "5/4"},
                    {mpq_get_d(table.t1.lo.get_mpq_t()), "t1"},
                    {mpq_get_d(table.t0.lo.get_mpq_t()), "t0"},
                    {mpq_get_d(table.k23_root.lo.get_mpq_t()), "k23"}};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"120\">\n";
    svg << "  <line x1=\"40\" y1=\"70\" x2=\"760\" y2=\"70\" stroke=\"black\"/>\n";
    for (const auto& m : marks) {
        double x = x_of(m.value);
        svg << "  <line x1=\"" << x << "\" y1=\"60\" x2=\"" << x
            << "\" y2=\"80\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << x - 12 << "\" y=\"50\" font-size=\"12\">" << m.label
            << "</text>\n";
        svg << "  <text x=\"" << x - 22 << "\" y=\"100\" font-size=\"10\">" << m.value
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace chromaroot

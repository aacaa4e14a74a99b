#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "chromaroot/chromatic.hpp"
#include "chromaroot/classes.hpp"
#include "chromaroot/gentri.hpp"
#include "chromaroot/graph.hpp"
#include "chromaroot/poly.hpp"

namespace chromaroot {

// Rational sample grid over the half-open interval (lo, hi]: dyadic points
// lo + k*step strictly inside, plus the right endpoint exactly. The step is
// halved until the minimum sample count is reached.
struct TGrid {
    Rational lo;
    Rational hi;
    std::vector<Rational> samples;

    static TGrid dyadic(const Rational& lo, const Rational& hi, int min_samples = 64);
};

// Certified reference constants. Root intervals have width <= the given
// refinement width; gamma/alpha/beta are exact rationals evaluated at the
// rational lower approximant q_lower of q.
struct ConstantsTable {
    RootInterval q;         // real root of t^4-4t^3+4t^2-4t+4 in (1,2)
    RootInterval t0;        // unique real root of t^3-2t^2+4t-4
    RootInterval t1;        // smallest real root of the degree-6 reference polynomial
    RootInterval k23_root;  // real root of t^3-5t^2+10t-7
    Rational thirty_two_over_27;
    Rational five_quarters;
    Rational q_lower;  // q - q_lower < width, certified below q
    Rational gamma;
    Rational alpha;
    Rational beta;
};

ConstantsTable certify_constants();

struct CheckResult {
    std::string name;
    bool passed = true;
    long instances = 0;
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json witnesses = nlohmann::json::array();
};

struct Report {
    std::string command;
    nlohmann::json meta = nlohmann::json::object();
    std::vector<CheckResult> checks;

    bool all_passed() const;
    long total_instances() const;
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

// Constant certification and the three closed-form inequalities (with the
// monotone-decrease check) over a dyadic grid on (1, q_lower].
Report constants_report(int grid_min_samples = 64);
// The inequality check alone, on a caller-supplied grid; the grid must lie
// within (1, q_lower].
Report check_constants_inequalities(const TGrid& grid, const ConstantsTable& table);

// Clause sweeps of the two bounding lemmas over every enumerated class
// member with at most n_max vertices. Grids must lie within (1, 5/4] and
// (1, q_lower] respectively.
Report verify_K1_lemma(int n_max, const TGrid& grid, int jobs = 1);
Report verify_K2_lemma(int n_max, const TGrid& grid, const ConstantsTable& table, int jobs = 1);

enum class ClassFilter { all_K, K1, K2, K1K2, ham_path };
std::string to_string(ClassFilter f);

// Minimum smallest-nontrivial-root over the filtered enumerated class,
// with the certified witness interval and the gap to the class limit.
Report omega_scan(ClassFilter filter, int n_max, int jobs = 1);

// in_K1 <=> H0-minor-free and in_K2 <=> {H1,H2}-minor-free over all
// enumerated generalised triangles <= n_max, plus recovery of the minimal
// obstruction sets.
Report crosscheck_forbidden_minors(int n_max, int jobs = 1);

// poset_minor <=> brute_minor on every ordered pair of enumerated
// generalised triangles with host <= n_max.
Report minor_order_equivalence(int n_max, int jobs = 1);

// Whitney-switch polynomial invariance, to_ham_form round trips, and the
// Hamiltonian-path class containment.
Report structural_checks(int n_max, int jobs = 1);

// Strict monotone decrease of the smallest nontrivial roots along both
// J-sequences for indices 0..i_max, with the class lower bounds.
Report j_sequence_monotonicity(int i_max, const ConstantsTable& table, int jobs = 1);

struct VerifyOptions {
    int lemma_n_max = 11;
    int minor_cross_n_max = 11;
    int forbidden_n_max = 13;
    int omega_n_max = 13;
    int structural_n_max = 13;
    int jseq_i_max = 4;
    int grid_min_samples = 64;
    int jobs = 1;
};

// The full suite; report content is byte-identical for any worker count.
Report run_verify_suite(const VerifyOptions& options);

// Number-line SVG of the certified constants and scan minima.
std::string constants_svg(const ConstantsTable& table);

nlohmann::json rational_json(const Rational& x);
nlohmann::json interval_json(const RootInterval& r);

}  // namespace chromaroot

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "chromaroot/chromatic.hpp"
#include "chromaroot/classes.hpp"
#include "chromaroot/gentri.hpp"
#include "chromaroot/graph.hpp"
#include "chromaroot/poly.hpp"
#include "chromaroot/verify.hpp"

using namespace chromaroot;
using nlohmann::json;

namespace {

// Accepts a literal graph6 string or a path to a file whose first line is
// one.
Graph load_graph(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return graph6_decode(line);
        throw std::invalid_argument("no graph6 line found in " + arg);
    }
    return graph6_decode(arg);
}

json poly_json(const Graph& g) {
    IntPoly p = chromatic_polynomial(g);
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    json root = nullptr;
    auto found = smallest_nontrivial_root(g);
    if (found)
        root = json{{"lo", found->interval.lo.get_str()},
                    {"hi", found->interval.hi.get_str()},
                    {"lo_decimal", decimal_string(found->interval.lo, 12)},
                    {"hi_decimal", decimal_string(found->interval.hi, 12)},
                    {"exactly_two", found->exactly_two}};
    return json{{"graph6", graph6_encode(g)},
                {"n", g.vertex_count()},
                {"coeffs", coeffs},
                {"poly", p.to_string()},
                {"smallest_nontrivial_root", root}};
}

int emit_report(const Report& report, const std::string& format) {
    if (format == "csv") {
        std::cout << report.to_csv();
    } else if (format == "svg") {
        std::cout << constants_svg(certify_constants());
    } else {
        std::cout << report.to_json().dump(2) << '\n';
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic-root analysis for generalised triangles"};
    app.require_subcommand(1);

    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
    app.add_option("--jobs", jobs, "worker threads");
    bool timing = false;
    app.add_flag("--timing", timing, "print elapsed time to stderr");

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list generalised triangles");
    int max_n = 13;
    cmd_enumerate->add_option("--max-n", max_n, "largest vertex count (odd)");
    std::string out_path;
    cmd_enumerate->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_poly = app.add_subcommand("poly", "chromatic polynomial of a graph");
    std::string poly_arg;
    cmd_poly->add_option("graph", poly_arg, "graph6 string or file")->required();

    auto* cmd_roots = app.add_subcommand("roots", "nontrivial chromatic roots in an interval");
    std::string roots_arg, roots_lo = "1", roots_hi = "2";
    cmd_roots->add_option("graph", roots_arg, "graph6 string or file")->required();
    cmd_roots->add_option("--lo", roots_lo, "interval lower endpoint");
    cmd_roots->add_option("--hi", roots_hi, "interval upper endpoint");

    auto* cmd_classify = app.add_subcommand("classify", "2-cut property classification");
    std::string classify_arg;
    cmd_classify->add_option("graph", classify_arg, "graph6 string or file")->required();

    auto* cmd_minor = app.add_subcommand("minor", "poset minor test with witness");
    std::string minor_h, minor_g;
    cmd_minor->add_option("minor_h", minor_h, "graph6 string or file")->required();
    cmd_minor->add_option("minor_g", minor_g, "graph6 string or file")->required();

    auto* cmd_hamform = app.add_subcommand("hamform", "Whitney switches to a Hamiltonian form");
    std::string hamform_arg;
    cmd_hamform->add_option("graph", hamform_arg, "graph6 string or file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    std::string verify_out = "json";
    cmd_verify->add_option("--out", verify_out, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    VerifyOptions options;
    cmd_verify->add_option("--max-n", options.lemma_n_max,
                           "vertex cap for the lemma sweeps (odd, default 11)");
    cmd_verify->add_option("--minor-max-n", options.minor_cross_n_max,
                           "vertex cap for the brute-force minor cross-check");
    cmd_verify->add_option("--forbidden-max-n", options.forbidden_n_max,
                           "vertex cap for the forbidden-minor scan");
    cmd_verify->add_option("--omega-max-n", options.omega_n_max, "vertex cap for omega scans");
    cmd_verify->add_option("--structural-max-n", options.structural_n_max,
                           "vertex cap for the structural sweeps");
    cmd_verify->add_option("--jseq-max", options.jseq_i_max, "J-sequence index cap");
    cmd_verify->add_option("--grid", options.grid_min_samples, "minimum grid samples");

    auto* cmd_omega = app.add_subcommand("omega", "minimum nontrivial root over a class");
    std::string omega_class = "all_K", omega_out = "json";
    int omega_max_n = 13;
    cmd_omega->add_option("--class", omega_class, "all_K|K1|K2|K1K2|ham_path")
        ->check(CLI::IsMember({"all_K", "K1", "K2", "K1K2", "ham_path"}));
    cmd_omega->add_option("--max-n", omega_max_n, "largest vertex count (odd)");
    cmd_omega->add_option("--out", omega_out, "json|csv|svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));

    auto* cmd_constants = app.add_subcommand("constants", "certify the reference constants");
    std::string constants_out = "json";
    int constants_grid = 64;
    cmd_constants->add_option("--out", constants_out, "json|csv|svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    cmd_constants->add_option("--grid", constants_grid, "minimum grid samples");

    CLI11_PARSE(app, argc, argv);

    const char* cache_path = std::getenv("CHROMAROOT_CACHE");
    if (cache_path) global_chromatic_memo().load_file(cache_path);
    auto started = std::chrono::steady_clock::now();
    int exit_code = 0;

    try {
        if (*cmd_enumerate) {
            auto members = enumerate_gentri(max_n, jobs);
            if (out_path.empty()) {
                for (const auto& g : members) std::cout << graph6_encode(g) << '\n';
            } else {
                write_graph6_file(out_path, members);
            }
        } else if (*cmd_poly) {
            std::cout << poly_json(load_graph(poly_arg)).dump(2) << '\n';
        } else if (*cmd_roots) {
            Graph g = load_graph(roots_arg);
            IntPoly p = chromatic_polynomial(g);
            IntPoly reduced =
                p.divide_exact(IntPoly::t()).divide_exact(IntPoly::t() - IntPoly::one());
            Rational lo = rational_from_decimal(roots_lo);
            Rational hi = rational_from_decimal(roots_hi);
            json intervals = json::array();
            for (const auto& r : isolate_roots(reduced, lo, hi))
                intervals.push_back(json{{"lo", r.lo.get_str()},
                                         {"hi", r.hi.get_str()},
                                         {"lo_decimal", decimal_string(r.lo, 12)},
                                         {"hi_decimal", decimal_string(r.hi, 12)}});
            json out{{"graph6", graph6_encode(g)},
                     {"reduced_poly", reduced.to_string()},
                     {"interval", {roots_lo, roots_hi}},
                     {"roots", intervals},
                     {"root_exactly_at_hi", reduced.sign_at(hi) == 0}};
            std::cout << out.dump(2) << '\n';
        } else if (*cmd_classify) {
            Graph g = load_graph(classify_arg);
            bool gentri = is_generalised_triangle(g);
            json cuts = json::array();
            ConnectivityLevel level = connectivity_level(g);
            if (level == ConnectivityLevel::two || level == ConnectivityLevel::three_plus) {
                for (const auto& cut : two_cuts(g))
                    cuts.push_back(json{{"cut", {cut.x, cut.y}},
                                        {"P1", cut_satisfies(g, cut, CutProperty::P1)},
                                        {"P2", cut_satisfies(g, cut, CutProperty::P2)}});
            }
            json out{{"graph6", graph6_encode(g)},
                     {"is_gentri", gentri},
                     {"in_K1", gentri ? json(in_K1(g)) : json(nullptr)},
                     {"in_K2", gentri ? json(in_K2(g)) : json(nullptr)},
                     {"two_cuts", cuts}};
            std::cout << out.dump(2) << '\n';
        } else if (*cmd_minor) {
            Graph h = load_graph(minor_h);
            Graph g = load_graph(minor_g);
            bool verdict = poset_minor(h, g);
            json out{{"h", graph6_encode(h)}, {"g", graph6_encode(g)}, {"is_minor", verdict}};
            if (verdict) {
                auto trace = poset_minor_witness(h, g);
                json steps = json::array();
                for (const auto& [state, edge] : trace->steps)
                    steps.push_back(json{{"graph6", graph6_encode(state)},
                                         {"subdivide_edge", {edge.first, edge.second}}});
                out["witness"] = steps;
            }
            std::cout << out.dump(2) << '\n';
            exit_code = verdict ? 0 : 1;
        } else if (*cmd_hamform) {
            Graph g = load_graph(hamform_arg);
            auto [switched, steps] = to_ham_form(g);
            json jsteps = json::array();
            for (const auto& step : steps) {
                json comp = json::array();
                for (int v = step.component.first(); v != -1; v = step.component.next(v))
                    comp.push_back(v);
                jsteps.push_back(json{{"cut", {step.cut.x, step.cut.y}}, {"component", comp}});
            }
            auto path = hamiltonian_path(switched);
            json out{{"graph6", graph6_encode(g)},
                     {"switched_graph6", graph6_encode(switched)},
                     {"steps", jsteps},
                     {"hamiltonian_path", path ? json(*path) : json(nullptr)}};
            std::cout << out.dump(2) << '\n';
        } else if (*cmd_verify) {
            options.jobs = jobs;
            Report report = run_verify_suite(options);
            exit_code = emit_report(report, verify_out);
        } else if (*cmd_omega) {
            ClassFilter filter = ClassFilter::all_K;
            if (omega_class == "K1") filter = ClassFilter::K1;
            if (omega_class == "K2") filter = ClassFilter::K2;
            if (omega_class == "K1K2") filter = ClassFilter::K1K2;
            if (omega_class == "ham_path") filter = ClassFilter::ham_path;
            exit_code = emit_report(omega_scan(filter, omega_max_n, jobs), omega_out);
        } else if (*cmd_constants) {
            exit_code = emit_report(constants_report(constants_grid), constants_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (timing) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        std::cerr << "elapsed_ms " << elapsed.count() << '\n';
    }
    if (cache_path && exit_code == 0) global_chromatic_memo().save_file(cache_path);
    return exit_code;
}

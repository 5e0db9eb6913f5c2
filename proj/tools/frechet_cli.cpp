// Command-line front end: exact and approximate discrete Frechet distance,
// synthetic generators, and a size-sweep benchmark emitting TSV.

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frechet/curve_classes.hpp"
#include "frechet/curve_io.hpp"
#include "frechet/errors.hpp"
#include "frechet/freespace.hpp"
#include "frechet/generators.hpp"
#include "frechet/oracle.hpp"
#include "frechet/output_sensitive.hpp"
#include "frechet/report.hpp"

namespace {

using namespace frechet;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitContractViolation = 3;

Norm parse_norm(const std::string& s) {
    if (s == "l1") return Norm::L1;
    if (s == "l2") return Norm::L2;
    if (s == "linf") return Norm::LInf;
    throw std::invalid_argument("unknown norm '" + s + "'");
}

struct Options {
    std::string algo;
    std::string norm = "l2";
    double eps = 0.1;
    double kappa = 2.0;
    double c1 = 0.5;
    double c2 = 2.0;
    std::string input;
    std::string curve_a;
    std::string curve_b;
    std::string generate;
    std::size_t n = 64;
    std::size_t m = 0;  // defaults to n
    std::uint64_t seed = 1;
    int dim = 2;
    std::string report = "json";
    std::string dfd_algo = "dp";
    bool bench = false;
};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::pair<Curve, Curve> make_pair_from_generator(const Options& opt, std::size_t n) {
    const std::size_t m = opt.m == 0 ? n : opt.m;
    if (opt.generate == "backbone")
        return {generate_backbone(n, opt.c1, opt.c2, opt.seed, opt.dim),
                generate_backbone(m, opt.c1, opt.c2, opt.seed + 1, opt.dim)};
    if (opt.generate == "kbounded")
        return {generate_kbounded(n, opt.kappa, opt.seed, opt.dim),
                generate_kbounded(m, opt.kappa, opt.seed + 1, opt.dim)};
    if (opt.generate == "lattice") {
        auto [sigma, delta] = generate_lattice_sigma(n);
        (void)delta;
        // A single center vertex against the lattice walk; the matching
        // threshold for this family is n^(1/3) / 2.
        const double c = (std::cbrt(static_cast<double>(n)) - 1.0) / 2.0;
        return {Curve({Point{c, c, c}}), sigma};
    }
    throw std::invalid_argument("unknown generator '" + opt.generate + "'");
}

std::pair<Curve, Curve> load_curves(const Options& opt) {
    if (!opt.input.empty()) {
        const CurveFile f = read_curve_file(opt.input);
        if (f.curves.size() < 2 && (opt.curve_a.empty() || opt.curve_b.empty()))
            throw std::invalid_argument("input file must contain two curves");
        const Curve& a = opt.curve_a.empty() ? f.curves[0].curve : f.by_name(opt.curve_a);
        const Curve& b = opt.curve_b.empty() ? f.curves[1].curve : f.by_name(opt.curve_b);
        return {a, b};
    }
    if (!opt.generate.empty()) return make_pair_from_generator(opt, opt.n);
    throw std::invalid_argument("need --input or --generate");
}

RunReport run_algorithm(const Options& opt, const Curve& a, const Curve& b) {
    const Norm norm = parse_norm(opt.norm);
    RunReport r;
    r.algorithm = opt.algo;
    const auto t0 = std::chrono::steady_clock::now();

    if (opt.algo == "dp") {
        r.value = dfd_dp(a, b, norm).value;
    } else if (opt.algo == "binsearch") {
        r.value = dfd_binary_search(a, b, norm);
    } else if (opt.algo == "output-sensitive") {
        const auto res = dfd_output_sensitive(a, b, norm);
        r.value = res.value;
        r.probes = res.probes;
        r.switching_cells = res.max_switching_cells;
    } else if (opt.algo == "kbounded") {
        ApproxParams params;
        params.eps = opt.eps;
        params.kappa = opt.kappa;
        const auto res = approx_dfd_kbounded(a, b, params, norm);
        r.value = res.value;
        r.eps = opt.eps;
        r.probes = res.trace.probes.size();
    } else if (opt.algo == "backbone") {
        std::vector<FuzzyAnswer> probes;
        r.value = appr_f_backbone(a, b, opt.eps, norm, opt.c1, opt.c2, &probes);
        r.eps = opt.eps;
        r.probes = probes.size();
    } else if (opt.algo == "continuous") {
        ExactAlgorithm algo = ExactAlgorithm::Dp;
        if (opt.dfd_algo == "binsearch") algo = ExactAlgorithm::BinarySearch;
        if (opt.dfd_algo == "output-sensitive") algo = ExactAlgorithm::OutputSensitive;
        r.value = approx_fd_continuous(a, b, opt.eps, norm, algo);
        r.eps = opt.eps;
    } else {
        throw std::invalid_argument("unknown algorithm '" + opt.algo + "'");
    }

    // Diagram statistics at the computed threshold. Exact runs report the
    // full diagram; approximate runs report the simplified decider's diagram
    // and leave switching_cells at zero.
    if (opt.algo == "dp" || opt.algo == "binsearch" || opt.algo == "output-sensitive") {
        r.white_cells = build_white_cells(a, b, r.value, norm).total();
        if (r.switching_cells == 0)
            r.switching_cells = compute_switching_cells(a, b, r.value, norm).total_count;
    } else if (r.value > 0.0) {
        DecideStats stats;
        fuzzy_decide_simplified(a, b, r.value, std::min(opt.eps, 0.99), 0.5, norm, &stats);
        r.white_cells = stats.white_cells;
    }

    r.wall_time_ms = elapsed_ms(t0);
    return r;
}

int run_single(const Options& opt) {
    const auto [a, b] = load_curves(opt);
    const RunReport r = run_algorithm(opt, a, b);
    if (opt.report == "tsv")
        std::cout << report_tsv_header() << "\n" << report_to_tsv_row(r) << "\n";
    else
        std::cout << report_to_json(r) << "\n";
    return kExitOk;
}

// Lattice sweep: per-column white/switching counts for the center vertex at
// the matching threshold, showing how sparsely the switching cells sample
// the white structure as n grows.
int run_lattice_bench(const Options& opt) {
    std::cout << "n\twhite_cells\tswitching_cells\twall_time_ms\n";
    for (std::size_t n : {27u, 216u, 1000u, 4096u, 13824u}) {
        const auto t0 = std::chrono::steady_clock::now();
        auto [sigma, delta] = generate_lattice_sigma(n);
        const double c = (std::cbrt(static_cast<double>(n)) - 1.0) / 2.0;
        const Curve pi({Point{c, c, c}});
        const Norm norm = parse_norm(opt.norm);
        const std::size_t white = build_white_cells(pi, sigma, delta, norm).total();
        const std::size_t sw = compute_switching_cells(pi, sigma, delta, norm).total_count;
        std::cout << n << "\t" << white << "\t" << sw << "\t" << format_double(elapsed_ms(t0))
                  << "\n";
    }
    return kExitOk;
}

int run_bench(const Options& opt) {
    if (opt.generate == "lattice") return run_lattice_bench(opt);
    if (opt.generate.empty())
        throw std::invalid_argument("--bench needs --generate {backbone|kbounded|lattice}");
    std::cout << report_tsv_header(true) << "\n";
    for (std::size_t n : {256u, 512u, 1024u, 2048u, 4096u}) {
        Options cell = opt;
        cell.n = n;
        cell.m = 0;
        if (cell.algo.empty()) cell.algo = opt.generate == "backbone" ? "backbone" : "kbounded";
        const auto [a, b] = make_pair_from_generator(cell, n);
        const RunReport r = run_algorithm(cell, a, b);
        std::cout << report_to_tsv_row(r, n) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{
        "Discrete Frechet distance: exact, output-sensitive, and "
        "approximation algorithms for polygonal curves"};
    app.add_option("--algo", opt.algo,
                   "dp|binsearch|output-sensitive|kbounded|backbone|continuous");
    app.add_option("--norm", opt.norm, "l1|l2|linf (default l2)");
    app.add_option("--eps", opt.eps, "approximation ratio for approximate algorithms");
    app.add_option("--kappa", opt.kappa, "kappa bound (kbounded generator/algorithm)");
    app.add_option("--c1", opt.c1, "backbone minimum edge length");
    app.add_option("--c2", opt.c2, "backbone maximum edge length");
    app.add_option("--input", opt.input, "curve file (.csv or .json)");
    app.add_option("--curve-a", opt.curve_a, "name of the first curve in --input");
    app.add_option("--curve-b", opt.curve_b, "name of the second curve in --input");
    app.add_option("--generate", opt.generate, "backbone|kbounded|lattice");
    app.add_option("--n", opt.n, "generated size of the first curve");
    app.add_option("--m", opt.m, "generated size of the second curve (default n)");
    app.add_option("--seed", opt.seed, "generator seed");
    app.add_option("--dim", opt.dim, "generated dimension (default 2)");
    app.add_option("--report", opt.report, "json|tsv (default json)");
    app.add_option("--dfd-algo", opt.dfd_algo,
                   "exact engine for --algo continuous: dp|binsearch|output-sensitive");
    app.add_flag("--bench", opt.bench, "sweep sizes and emit one TSV row per size");

    try {
        app.parse(argc, argv);
        if (opt.bench) return run_bench(opt);
        if (opt.algo.empty()) throw std::invalid_argument("--algo is required");
        return run_single(opt);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return kExitContractViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

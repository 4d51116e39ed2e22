#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "apsum/classify.hpp"
#include "apsum/congruences.hpp"
#include "apsum/power_sums.hpp"
#include "apsum/report.hpp"
#include "apsum/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GridArgs {
    std::uint64_t k_min = 0, k_max = 0, n_min = 0, n_max = 0;
    unsigned jobs = 0;
    std::string format = "json";
    std::string out = "-";
    bool progress = false;
};

void add_grid_options(CLI::App* cmd, GridArgs& args, std::uint64_t k_min, std::uint64_t k_max,
                      std::uint64_t n_min, std::uint64_t n_max) {
    args.k_min = k_min;
    args.k_max = k_max;
    args.n_min = n_min;
    args.n_max = n_max;
    args.jobs = apsum::default_worker_count();
    cmd->add_option("--k-min", args.k_min, "Smallest exponent k")->capture_default_str();
    cmd->add_option("--k-max", args.k_max, "Largest exponent k")->capture_default_str();
    cmd->add_option("--n-min", args.n_min, "Smallest index n")->capture_default_str();
    cmd->add_option("--n-max", args.n_max, "Largest index n")->capture_default_str();
    cmd->add_option("--jobs", args.jobs, "Worker thread count")->capture_default_str();
    cmd->add_option("--format", args.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", args.out, "Report destination path, - for stdout")
        ->capture_default_str();
    cmd->add_flag("--progress", args.progress, "Print row progress to stderr");
}

int run_grid(apsum::ScanKind kind, const GridArgs& args) {
    apsum::ScanReport report = apsum::run_scan(kind, {args.k_min, args.k_max},
                                               {args.n_min, args.n_max}, args.jobs, args.progress);
    apsum::emit_report(report, *apsum::format_from_string(args.format), args.out);
    std::cerr << "scan " << apsum::to_string(kind) << ": " << report.record_count() << " records, "
              << report.violations.size() << " violations, " << report.elapsed_seconds << "s with "
              << report.worker_count << " workers\n";
    return report.violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and modular power-sum toolkit: alternating power sums, their\n"
                 "congruence classes, and exhaustive integer-ratio verification."};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Evaluate a single power sum S_k(n) or A_k(n)");
    std::string sum_kind;
    std::uint64_t c_k = 0, c_n = 0, c_mod = 0;
    compute->add_option("sum", sum_kind, "Which sum: S (classical) or A (alternating)")
        ->required()
        ->check(CLI::IsMember({"S", "A", "s", "a"}));
    compute->add_option("-k,--k", c_k, "Exponent k >= 1")->required();
    compute->add_option("-n,--n", c_n, "Upper index n >= 1")->required();
    compute->add_option("--mod", c_mod, "Report the value modulo this instead (streaming path)");

    // ratio
    auto* ratio = app.add_subcommand("ratio", "Reduced ratio of consecutive sums at (k, n)");
    std::uint64_t r_k = 0, r_n = 0;
    bool r_classic = false;
    ratio->add_option("-k,--k", r_k, "Exponent k >= 1")->required();
    ratio->add_option("-n,--n", r_n, "Denominator index n >= 2")->required();
    ratio->add_flag("--classic", r_classic, "Use S_k(n+1)/S_k(n) instead of A_k(n+1)/A_k(n)");

    GridArgs lemma1_args, lemma2_args, theorem_args, kellner_args, identities_args;
    auto* lemma1 = app.add_subcommand("check-lemma1", "Check the 2*S_k(n) congruence on a grid");
    add_grid_options(lemma1, lemma1_args, 2, 100, 1, 1000);
    auto* lemma2 = app.add_subcommand("check-lemma2", "Check the A_k(n) congruence on a grid");
    add_grid_options(lemma2, lemma2_args, 2, 100, 2, 1000);
    auto* theorem = app.add_subcommand(
        "verify-theorem", "Verify predicted vs actual integrality of A_k(n+1)/A_k(n) on a grid");
    add_grid_options(theorem, theorem_args, 1, 200, 2, 2000);
    auto* kellner = app.add_subcommand(
        "scan-kellner", "Find every integer S_k(n+1)/S_k(n) on a grid; flag unexpected hits");
    add_grid_options(kellner, kellner_args, 1, 100, 3, 500);
    auto* identities = app.add_subcommand(
        "check-identities", "Check the odd-n decomposition identity and reflection congruence");
    add_grid_options(identities, identities_args, 2, 100, 3, 1001);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            bool alternating = (sum_kind == "A" || sum_kind == "a");
            if (compute->count("--mod") > 0) {
                std::uint64_t r = alternating ? apsum::mod_A(c_k, c_n, c_mod)
                                              : apsum::mod_S(c_k, c_n, c_mod);
                std::cout << r << "\n";
            } else {
                apsum::BigInt v =
                    alternating ? apsum::exact_A(c_k, c_n) : apsum::exact_S(c_k, c_n);
                std::cout << v.get_str() << "\n";
            }
            return kExitOk;
        }
        if (ratio->parsed()) {
            apsum::ReducedFraction f = r_classic ? apsum::exact_classical_ratio(r_k, r_n)
                                                 : apsum::exact_ratio(r_k, r_n);
            std::cout << f.str() << "\n";
            return kExitOk;
        }
        if (lemma1->parsed()) return run_grid(apsum::ScanKind::Lemma1, lemma1_args);
        if (lemma2->parsed()) return run_grid(apsum::ScanKind::Lemma2, lemma2_args);
        if (theorem->parsed()) return run_grid(apsum::ScanKind::Theorem, theorem_args);
        if (kellner->parsed()) return run_grid(apsum::ScanKind::Kellner, kellner_args);
        if (identities->parsed()) return run_grid(apsum::ScanKind::Identities, identities_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

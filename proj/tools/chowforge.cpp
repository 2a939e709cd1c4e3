// chowforge: run verification suites and export named ideals.
//
//   chowforge verify <suite>... [--n-max N] [--r-max R] [--l-max L]
//       [--budget-steps S] [--budget-secs T] [--seed K] [--json PATH]
//       [--workers W] [--force] [--soft-timeouts] [--quiet]
//   chowforge export <ideal-id> [PATH]
//   chowforge list
//
// Every option also reads CHOWFORGE_<NAME> (e.g. CHOWFORGE_N_MAX); the
// command line wins.

#include "chowforge/cherncycles.hpp"
#include "chowforge/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace chowforge;

namespace {

int run_verify(SuiteConfig& cfg, const std::string& json_path, bool quiet) {
    cfg.validate();
    std::ofstream json_out;
    if (!json_path.empty() && json_path != "-") {
        json_out.open(json_path);
        if (!json_out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
    }
    VerificationReport rep = run_suites(cfg);
    if (!quiet) std::cout << rep.text();
    if (json_path == "-")
        std::cout << report_json(rep, cfg) << "\n";
    else if (json_out.is_open())
        json_out << report_json(rep, cfg) << "\n";
    return rep.ok(cfg.soft_timeouts) ? 0 : 1;
}

int run_export(const std::string& id, const std::string& path) {
    Ideal I = named_ideal(id);
    std::string text = export_ideal(I);
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Chern-cycle and K-theory identities"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string json_path;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suites", cfg.suites, "Suites to run (or all)")->required();
    verify->add_option("--n-max", cfg.n_max, "Largest matrix size")->envname("CHOWFORGE_N_MAX");
    verify->add_option("--r-max", cfg.r_max, "Largest simplicial level")->envname("CHOWFORGE_R_MAX");
    verify->add_option("--l-max", cfg.l_max, "Largest simplex dimension for the simplicial suite")
        ->envname("CHOWFORGE_L_MAX");
    verify->add_option("--budget-steps", cfg.budget.steps, "Groebner step budget per case")
        ->envname("CHOWFORGE_BUDGET_STEPS");
    verify->add_option("--budget-secs", cfg.budget.seconds, "Wall-clock budget per case")
        ->envname("CHOWFORGE_BUDGET_SECS");
    verify->add_option("--seed", cfg.seed, "Run seed")->envname("CHOWFORGE_SEED");
    verify->add_option("--json", json_path, "Write the JSON report here (- for stdout)")->envname("CHOWFORGE_JSON");
    verify->add_option("--workers", cfg.workers, "Parallel cases")->envname("CHOWFORGE_WORKERS");
    verify->add_flag("--force", cfg.force, "Allow parameters outside the default envelope")
        ->envname("CHOWFORGE_FORCE");
    verify->add_flag("--soft-timeouts", cfg.soft_timeouts, "Timeouts do not affect the exit code")
        ->envname("CHOWFORGE_SOFT_TIMEOUTS");
    verify->add_flag("--quiet", quiet, "No text report");

    std::string ideal_id, out_path;
    auto* exp = app.add_subcommand("export", "Write a named ideal in the exchange format");
    exp->add_option("id", ideal_id, "e.g. Afrak(2,1), C(2,1,1), theta(2,1,1,gl)")->required();
    exp->add_option("path", out_path, "Output file (stdout when omitted)");

    auto* list = app.add_subcommand("list", "List suites and ideal names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return run_verify(cfg, json_path, quiet);
        if (*exp) return run_export(ideal_id, out_path);
        if (*list) {
            std::cout << "suites: all";
            for (const auto& s : suite_names()) std::cout << " " << s;
            std::cout << "\nideals:";
            for (const auto& s : named_ideal_examples()) std::cout << " " << s;
            std::cout << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

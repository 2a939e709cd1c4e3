#include "chowforge/suites.hpp"

#include "chowforge/cherncycles.hpp"
#include "chowforge/kvsteinberg.hpp"
#include "chowforge/selfcheck.hpp"
#include "chowforge/simplicialcat.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowforge {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"intersection", "tricky",     "coherent", "lrel",  "special",
                                                "codim",        "whitney",    "jacobians", "simplicial", "lulu",
                                                "steinberg",    "gamma",      "sk1",       "engine"};
    return names;
}

void SuiteConfig::validate() const {
    if (suites.empty()) throw std::invalid_argument("no suite selected");
    for (const auto& s : suites)
        if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite: " + s);
    if (n_max < 2) throw std::invalid_argument("n-max must be >= 2");
    if (r_max < 1) throw std::invalid_argument("r-max must be >= 1");
    if (l_max < 1) throw std::invalid_argument("l-max must be >= 1");
    if (budget.seconds <= 0) throw std::invalid_argument("budget-secs must be positive");
    if (!force && (n_max > 3 || r_max > 2 || l_max > 4))
        throw std::invalid_argument("parameters outside the default envelope (n <= 3, r <= 2, l <= 4); pass --force");
}

namespace {

std::vector<CaseSpec> cases_of(const std::string& s, const SuiteConfig& c) {
    if (s == "intersection") return intersection_cases(c.n_max);
    if (s == "tricky") return tricky_cases(c.n_max, c.n_max + 1);
    if (s == "coherent") return coherent_cases(c.n_max);
    if (s == "lrel") return L_relation_cases(2, c.r_max);
    if (s == "special") return special_cases(2, c.r_max, 1);
    if (s == "codim") return codim_cases(2, c.r_max);
    if (s == "whitney") return whitney_cases(2, c.r_max);
    if (s == "jacobians") return jacobian_cases(2, c.r_max);
    if (s == "simplicial") return simplicial_cases(c.l_max);
    if (s == "lulu") return lulu_cases(c.n_max);
    if (s == "steinberg") return steinberg_cases();
    if (s == "gamma") return gamma_cases();
    if (s == "sk1") return sk1_cases(c.r_max);
    if (s == "engine") return engine_cases();
    throw std::invalid_argument("unknown suite: " + s);
}

}  // namespace

std::vector<CaseSpec> build_cases(const SuiteConfig& cfg) {
    cfg.validate();
    bool all = std::find(cfg.suites.begin(), cfg.suites.end(), "all") != cfg.suites.end();
    std::vector<CaseSpec> out;
    for (const auto& s : suite_names()) {
        if (!all && std::find(cfg.suites.begin(), cfg.suites.end(), s) == cfg.suites.end()) continue;
        auto cs = cases_of(s, cfg);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

VerificationReport run_suites(const SuiteConfig& cfg) {
    RunOptions opt;
    opt.budget = cfg.budget;
    opt.seed = cfg.seed;
    opt.workers = cfg.workers;
    return run_cases(build_cases(cfg), opt);
}

std::string report_json(const VerificationReport& rep, const SuiteConfig& cfg, int indent) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["schema"] = 1;
    doc["tool"] = "chowforge";
    doc["config"] = {{"suites", cfg.suites},           {"n_max", cfg.n_max},
                     {"r_max", cfg.r_max},             {"l_max", cfg.l_max},
                     {"budget_steps", cfg.budget.steps}, {"budget_secs", cfg.budget.seconds},
                     {"seed", cfg.seed},               {"workers", cfg.workers},
                     {"force", cfg.force},             {"soft_timeouts", cfg.soft_timeouts}};
    doc["summary"] = {{"pass", rep.count(Verdict::Pass)},
                      {"fail", rep.count(Verdict::Fail)},
                      {"timeout", rep.count(Verdict::Timeout)},
                      {"open", rep.count(Verdict::Open)},
                      {"total", rep.records.size()}};
    ordered_json cases = ordered_json::array();
    for (const auto& r : rep.records) {
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        cases.push_back({{"suite", r.suite},
                         {"case_id", r.case_id},
                         {"params", params},
                         {"verdict", verdict_name(r.verdict)},
                         {"wall_ms", r.wall_ms},
                         {"gb",
                          {{"pairs", r.gb.pairs},
                           {"reductions", r.gb.reductions},
                           {"zero_reductions", r.gb.zero_reductions},
                           {"max_basis", r.gb.max_basis}}},
                         {"witness", r.witness},
                         {"seed", r.seed}});
    }
    doc["cases"] = std::move(cases);
    return doc.dump(indent);
}

}  // namespace chowforge

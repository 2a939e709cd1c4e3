#include "chowforge/suites.hpp"

#include "doctest.h"
#include "json.hpp"

#include <stdexcept>

using namespace chowforge;

TEST_CASE("case seeds are deterministic and id-dependent") {
    CHECK(case_seed(1, "a") == case_seed(1, "a"));
    CHECK(case_seed(1, "a") != case_seed(1, "b"));
    CHECK(case_seed(1, "a") != case_seed(2, "a"));
}

TEST_CASE("timeouts and errors stay inside their case") {
    std::vector<CaseSpec> cs;
    cs.push_back({"t", "budget", {}, [](std::uint64_t) -> CaseOutcome { throw BudgetExceeded("steps", GbStats{}); }});
    cs.push_back({"t", "error", {}, [](std::uint64_t) -> CaseOutcome { throw std::runtime_error("boom"); }});
    cs.push_back({"t", "fine", {}, [](std::uint64_t) { return CaseOutcome::pass(); }});
    auto rep = run_cases(cs, RunOptions{});
    REQUIRE(rep.records.size() == 3);
    CHECK(rep.records[0].verdict == Verdict::Timeout);
    CHECK(rep.records[1].verdict == Verdict::Fail);
    CHECK(rep.records[2].verdict == Verdict::Pass);
    CHECK(rep.ok(true) == false);
}

TEST_CASE("suite selection") {
    SuiteConfig c;
    c.suites = {"intersection"};
    c.n_max = 2;
    CHECK(build_cases(c).size() == 1);
    c.suites = {"nope"};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.suites = {"steinberg"};
    c.n_max = 4;
    CHECK_THROWS(c.validate());
    c.force = true;
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("report document and determinism") {
    SuiteConfig c;
    c.suites = {"steinberg", "gamma"};
    auto a = run_suites(c), b = run_suites(c);
    auto ja = nlohmann::json::parse(report_json(a, c)), jb = nlohmann::json::parse(report_json(b, c));
    CHECK(ja["schema"] == 1);
    CHECK(ja["summary"]["total"] == a.records.size());
    for (auto* j : {&ja, &jb})
        for (auto& k : (*j)["cases"]) k.erase("wall_ms");
    CHECK(ja == jb);
    for (const auto& k : ja["cases"])
        for (const char* f : {"suite", "case_id", "params", "verdict", "gb", "witness", "seed"}) CHECK(k.contains(f));
}

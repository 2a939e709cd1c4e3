#pragma once

#include "chowforge/groebner.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace chowforge {

enum class Verdict { Pass, Fail, Timeout, Open };

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);

using Params = std::vector<std::pair<std::string, std::string>>;

struct CaseOutcome {
    Verdict verdict = Verdict::Pass;
    std::string witness;

    static CaseOutcome pass(std::string w = {}) { return {Verdict::Pass, std::move(w)}; }
    static CaseOutcome fail(std::string w) { return {Verdict::Fail, std::move(w)}; }
    static CaseOutcome open(std::string w) { return {Verdict::Open, std::move(w)}; }
    static CaseOutcome check(bool ok, std::string w) { return {ok ? Verdict::Pass : Verdict::Fail, std::move(w)}; }
};

struct CaseRecord {
    std::string suite;
    std::string case_id;
    Params params;
    Verdict verdict = Verdict::Pass;
    double wall_ms = 0.0;
    GbStats gb;
    std::string witness;
    std::uint64_t seed = 0;
};

struct CaseSpec {
    std::string suite;
    std::string case_id;
    Params params;
    // Receives the per-case seed.
    std::function<CaseOutcome(std::uint64_t)> run;
};

struct RunOptions {
    Budget budget;
    std::uint64_t seed = 20240917;
    unsigned workers = 1;
};

class VerificationReport {
public:
    std::vector<CaseRecord> records;

    void add(CaseRecord r) { records.push_back(std::move(r)); }
    void merge(const VerificationReport& o);
    std::size_t count(Verdict v) const;
    bool has_fail() const { return count(Verdict::Fail) > 0; }
    // No fail, and no timeout unless timeouts are soft.
    bool ok(bool soft_timeouts = false) const;
    const CaseRecord* find(const std::string& case_id) const;
    std::string text() const;
};

// Seed for one case: mixes the run seed with the case id.
std::uint64_t case_seed(std::uint64_t seed, const std::string& case_id);

// Runs every case under its own budget. A budget exhaustion becomes a
// timeout verdict and an exception a fail; neither stops the other cases.
// Records come back in input order.
VerificationReport run_cases(const std::vector<CaseSpec>& cases, const RunOptions& opt);

}  // namespace chowforge

#pragma once

#include "chowforge/groebner.hpp"
#include "chowforge/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chowforge {

struct SuiteConfig {
    std::vector<std::string> suites{"all"};
    std::size_t n_max = 3;
    std::size_t r_max = 2;
    std::size_t l_max = 4;
    Budget budget;
    std::uint64_t seed = 20240917;
    unsigned workers = 1;
    bool force = false;
    bool soft_timeouts = false;

    // Throws std::invalid_argument on unknown suites or ranges outside the
    // envelope n <= 3, r <= 2, l <= 4 (unless force).
    void validate() const;
};

// In run order; "all" expands to every one of them.
const std::vector<std::string>& suite_names();

std::vector<CaseSpec> build_cases(const SuiteConfig& cfg);
VerificationReport run_suites(const SuiteConfig& cfg);

// Report document, schema 1:
// {schema, tool, config{...}, summary{pass, fail, timeout, open, total},
//  cases[{suite, case_id, params{}, verdict, wall_ms, gb{pairs, reductions,
//  zero_reductions, max_basis}, witness, seed}]}.
std::string report_json(const VerificationReport& rep, const SuiteConfig& cfg, int indent = 2);

}  // namespace chowforge

#include "chowforge/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace chowforge {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Timeout: return "timeout";
    case Verdict::Open: return "open";
    }
    return "fail";
}

Verdict parse_verdict(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "timeout") return Verdict::Timeout;
    if (s == "open") return Verdict::Open;
    throw std::invalid_argument("unknown verdict: " + s);
}

void VerificationReport::merge(const VerificationReport& o) {
    records.insert(records.end(), o.records.begin(), o.records.end());
}

std::size_t VerificationReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const CaseRecord& r) { return r.verdict == v; }));
}

bool VerificationReport::ok(bool soft_timeouts) const {
    return !has_fail() && (soft_timeouts || count(Verdict::Timeout) == 0);
}

const CaseRecord* VerificationReport::find(const std::string& case_id) const {
    for (const auto& r : records)
        if (r.case_id == case_id) return &r;
    return nullptr;
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    for (const auto& r : records) {
        os << verdict_name(r.verdict) << "  " << r.suite << "/" << r.case_id;
        if (!r.params.empty()) {
            os << " (";
            for (std::size_t i = 0; i < r.params.size(); ++i)
                os << (i ? ", " : "") << r.params[i].first << "=" << r.params[i].second;
            os << ")";
        }
        os << "  " << static_cast<long long>(r.wall_ms) << " ms";
        if (!r.witness.empty()) os << "\n      " << r.witness;
        os << "\n";
    }
    os << "summary: " << count(Verdict::Pass) << " pass, " << count(Verdict::Fail) << " fail, "
       << count(Verdict::Timeout) << " timeout, " << count(Verdict::Open) << " open\n";
    return os.str();
}

std::uint64_t case_seed(std::uint64_t seed, const std::string& case_id) {
    // FNV-1a over the id, then a splitmix64 finalizer.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : case_id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

CaseRecord run_one(const CaseSpec& c, const RunOptions& opt) {
    CaseRecord rec;
    rec.suite = c.suite;
    rec.case_id = c.case_id;
    rec.params = c.params;
    rec.seed = case_seed(opt.seed, c.case_id);
    auto t0 = std::chrono::steady_clock::now();
    {
        BudgetScope scope(opt.budget);
        try {
            CaseOutcome out = c.run(rec.seed);
            rec.verdict = out.verdict;
            rec.witness = std::move(out.witness);
        } catch (const BudgetExceeded& e) {
            rec.verdict = Verdict::Timeout;
            rec.witness = e.what();
        } catch (const std::exception& e) {
            rec.verdict = Verdict::Fail;
            rec.witness = std::string("error: ") + e.what();
        }
        rec.gb = BudgetScope::accumulated();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace

VerificationReport run_cases(const std::vector<CaseSpec>& cases, const RunOptions& opt) {
    std::vector<CaseRecord> out(cases.size());
    unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(cases.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) out[i] = run_one(cases[i], opt);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) out[i] = run_one(cases[i], opt);
            });
        for (auto& t : pool) t.join();
    }
    VerificationReport rep;
    rep.records = std::move(out);
    return rep;
}

}  // namespace chowforge

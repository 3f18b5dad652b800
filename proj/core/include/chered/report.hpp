#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chered {

enum class CheckStatus { Pass, Fail, Vacuous };

std::string status_str(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string counterexample; // replayable input + both operator outputs
    long elapsed_ms = 0;
};

// Deterministically ordered list of check outcomes. Checks appear in the
// order they were registered, regardless of evaluation order.
struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    size_t failures() const {
        size_t k = 0;
        for (const auto& c : checks) k += (c.status == CheckStatus::Fail);
        return k;
    }
    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
};

struct RunConfig {
    unsigned ell = 2;
    unsigned p = 1;
    unsigned n = 2;
    unsigned degree_bound = 3;
    unsigned samples = 20;
    uint64_t seed = 1;
    std::string format = "text"; // "text" or "json"
};

// Render a report as text (one line per check) or as the stable JSON schema
// {"tool", "version", "config", "checks": [...]}.
std::string report_text(const Report& r);
std::string report_json(const Report& r, const RunConfig& cfg);

} // namespace chered

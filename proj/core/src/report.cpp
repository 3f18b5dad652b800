#include "chered/report.hpp"

#include <sstream>

#include <json.hpp>

namespace chered {

std::string status_str(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: return "vacuous";
    }
    return "?";
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << "[" << status_str(c.status) << "] " << c.id;
        if (c.status == CheckStatus::Fail && !c.counterexample.empty())
            os << "\n    counterexample: " << c.counterexample;
        os << "\n";
    }
    size_t nf = r.failures();
    os << r.suite << ": " << (r.checks.size() - nf) << "/" << r.checks.size() << " checks passed";
    if (nf) os << ", " << nf << " FAILED";
    os << "\n";
    return os.str();
}

std::string report_json(const Report& r, const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["tool"] = "chered";
    j["version"] = "0.1.0";
    j["config"] = {
        {"suite", r.suite}, {"l", cfg.ell},       {"p", cfg.p},
        {"n", cfg.n},       {"degree", cfg.degree_bound}, {"samples", cfg.samples},
        {"seed", cfg.seed},
    };
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = status_str(c.status);
        if (c.counterexample.empty())
            jc["counterexample"] = nullptr;
        else
            jc["counterexample"] = c.counterexample;
        jc["elapsed_ms"] = c.elapsed_ms;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2);
}

} // namespace chered

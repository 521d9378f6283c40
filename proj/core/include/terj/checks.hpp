#pragma once

#include <string>
#include <vector>

namespace terj {

/// One named exact verification (no tolerances: pass means equality held).
struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// A bundle of named verifications produced by a structural constructor or
/// verifier. Failures are reported, not thrown, so callers can surface every
/// violated identity at once.
struct RelationReport {
    std::vector<RelationCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    /// "ok (n checks)" or a comma-separated list of failed names.
    std::string summary() const {
        if (all_pass()) return "ok (" + std::to_string(checks.size()) + " checks)";
        std::string s = "failed:";
        for (const auto& c : checks) {
            if (!c.pass) s += " " + c.name;
        }
        return s;
    }
};

} // namespace terj

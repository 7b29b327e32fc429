#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace s2t {

enum class CheckKind { structure, axiom };

struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::axiom;
    bool passed = true;
    std::string detail;  // first counterexample; empty when passed
};

// Outcome of a validation run.  Validators record at most one
// counterexample per check, and keep structural problems (malformed
// tables) apart from axiom failures so callers can tell them apart.
class Report {
public:
    void pass(std::string name, CheckKind kind = CheckKind::axiom) {
        checks_.push_back({std::move(name), kind, true, {}});
    }

    void fail(std::string name, std::string detail, CheckKind kind = CheckKind::axiom) {
        checks_.push_back({std::move(name), kind, false, std::move(detail)});
    }

    void add(std::string name, bool ok, std::string detail_on_fail,
             CheckKind kind = CheckKind::axiom) {
        if (ok)
            pass(std::move(name), kind);
        else
            fail(std::move(name), std::move(detail_on_fail), kind);
    }

    // Folds a sub-report into this one as a single named check.
    void absorb(std::string name, const Report& sub) {
        if (sub.ok()) {
            pass(std::move(name));
            return;
        }
        const CheckResult& f = sub.first_failure();
        fail(std::move(name), f.name + (f.detail.empty() ? "" : ": " + f.detail), f.kind);
    }

    bool ok() const {
        for (const auto& c : checks_)
            if (!c.passed) return false;
        return true;
    }

    bool structural_failure() const {
        for (const auto& c : checks_)
            if (!c.passed && c.kind == CheckKind::structure) return true;
        return false;
    }

    const CheckResult& first_failure() const {
        for (const auto& c : checks_)
            if (!c.passed) return c;
        assert(false && "first_failure() on a passing report");
        return checks_.front();
    }

    const std::vector<CheckResult>& checks() const { return checks_; }

    std::string to_text(const std::string& indent = "  ") const {
        std::string out;
        for (const auto& c : checks_) {
            out += indent + c.name + ": " + (c.passed ? "pass" : "FAIL");
            if (!c.passed && !c.detail.empty()) out += " (" + c.detail + ")";
            out += '\n';
        }
        return out;
    }

private:
    std::vector<CheckResult> checks_;
};

} // namespace s2t

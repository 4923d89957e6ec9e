#ifndef TRUNKIT_REPORT_HPP
#define TRUNKIT_REPORT_HPP

#include <string>
#include <vector>

namespace trunkit {

// Machine-readable outcome of one theorem check. A failing check carries a
// counterexample certificate; it would falsify the implementation (or the
// theorem) and is surfaced, never asserted away.
struct VerificationReport {
    std::string check;        // e.g. "thm-connectedness"
    std::string instance;     // which graph/seed was checked
    bool pass = false;
    bool lhs = false;         // left side of the biconditional (when applicable)
    bool rhs = false;
    std::string details;
    std::string certificate;  // counterexample payload when pass == false
};

struct SuiteReport {
    std::string suite;
    std::vector<VerificationReport> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace trunkit

#endif

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace atdm {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the built-in property suites (operator identities, Adomian
/// equivalence, manufactured-solution residuals, component anchors).
/// Prints one line per check to `out`; returns all results.
std::vector<CheckResult> run_verification(std::ostream& out);

}  // namespace atdm

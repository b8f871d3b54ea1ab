#pragma once

// Regression suite over published group structures and sieve values, plus
// the exhaustive soundness sweeps.  The CLI runs it as `verify --suite
// paper`; the acceptance test binary prints one line per check.

#include <string>
#include <vector>

namespace dsieve {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  // short diagnostic, filled on both outcomes
};

std::vector<Check> reference_suite();

}  // namespace dsieve

// Small-degree invariant suite bundled into the CLI (`gf2q selfcheck`).

#pragma once

#include <string>
#include <vector>

namespace gf2q {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CheckResult> run_selfcheck();

}  // namespace gf2q

#pragma once

#include <string>
#include <vector>

namespace cantor {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The full verification suite: ten property checks against brute-force
// oracles, each independent of the library paths it validates.  Runs in a
// few minutes on a laptop.
std::vector<CriterionResult> run_acceptance(bool verbose = false);

}  // namespace cantor

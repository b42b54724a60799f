// Runs the full verification suite and prints one line per criterion.
#include <cstdio>

#include "cantor/acceptance.hpp"

int main() {
    auto results = cantor::run_acceptance();
    int failed = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}

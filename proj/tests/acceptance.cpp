// Acceptance gate: runs every acceptance criterion at its stated trial count
// and exact (zero-tolerance) comparison, one pass/fail line per criterion.
#include <cstdio>

#include "ccsym/suites.hpp"

int main() {
    bool all = true;
    int index = 0;
    for (const auto& suite : ccsym::all_suites()) {
        if (!suite.acceptance) continue;
        ccsym::SuiteResult r = suite.run(ccsym::kDefaultSeed);
        ++index;
        if (r.pass)
            std::printf("PASS criterion %2d %-36s (%ld trials)\n", index,
                        r.name.c_str(), r.trials);
        else
            std::printf("FAIL criterion %2d %-36s (%ld trials): %s\n", index,
                        r.name.c_str(), r.trials, r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

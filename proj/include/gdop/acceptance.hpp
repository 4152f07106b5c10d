/*
 * acceptance.hpp
 * --------------
 * The end-to-end verification suite behind `gdop selftest` and the
 * acceptance test binary: dimension table, enumeration agreement, the
 * identity verifier corpus, relation-matrix reproduction, Koszul duals,
 * white products, membership certificates, pre-image round trips, counting
 * oracles, and the randomized property suites. Every tolerance is exact:
 * all comparisons are over Q.
 */
#pragma once

#include <string>
#include <vector>

namespace gdop {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// slow additionally runs the n = 6 enumeration agreement.
std::vector<CriterionResult> run_acceptance(bool slow);

} // namespace gdop

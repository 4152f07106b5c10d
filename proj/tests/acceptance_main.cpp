// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure. GDOP_SLOW=1 additionally runs the n = 6 enumeration check.
#include "gdop/acceptance.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    bool slow = std::getenv("GDOP_SLOW") != nullptr;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    auto results = gdop::run_acceptance(slow);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s  [%2d] %s  (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.number,
                    r.name.c_str(), r.seconds);
        if (!r.pass) std::printf("      %s\n", r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s: %zu/%zu criteria passed\n", all ? "OK" : "FAILED",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const auto& r) { return r.pass; })),
                results.size());
    return all ? 0 : 1;
}

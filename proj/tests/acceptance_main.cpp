// Acceptance gate: one line per criterion, nonzero exit iff any fails.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "lamplight/acceptance.hpp"

int main(int argc, char** argv) {
    auto level = lamplight::SuiteLevel::full;
    if (argc > 1 && std::strcmp(argv[1], "--quick") == 0) level = lamplight::SuiteLevel::quick;

    bool all_pass = true;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& r : lamplight::run_acceptance(level)) {
        std::printf("%-4s %-4s %s\n     %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL",
                    r.title.c_str(), r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("acceptance: %s (%.1fs)\n", all_pass ? "all criteria pass" : "FAILURES present",
                secs);
    return all_pass ? 0 : 1;
}

// Runs every acceptance suite and prints one line per criterion.
#include "fim/suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    fim::SuiteConfig config;
    if (argc > 1) config.seed = static_cast<std::uint32_t>(std::strtoul(argv[1], nullptr, 10));
    int failed = 0;
    for (const auto& info : fim::suites()) {
        const fim::SuiteResult r = fim::run_suite(info.name, config);
        std::printf("%s %-20s %5zu checks %8.2fs / %.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.checks,
                    r.seconds, r.limit_seconds, r.description.c_str());
        for (const auto& f : r.failures) std::printf("    - %s\n", f.c_str());
        if (!r.passed) ++failed;
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, fim::suites().size());
    return failed == 0 ? 0 : 1;
}

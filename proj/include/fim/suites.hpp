#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fim {

struct SuiteConfig {
    std::uint32_t seed = 1;
};

struct SuiteResult {
    std::string name;
    std::string description;
    bool passed = false;
    std::size_t checks = 0;
    double seconds = 0;
    double limit_seconds = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct SuiteInfo {
    std::string name;
    std::string description;
    double limit_seconds;
};

/// The acceptance suites in their canonical order.
const std::vector<SuiteInfo>& suites();
/// Runs one suite; throws std::invalid_argument for an unknown name. A suite passes when
/// every check holds and it finishes within its time limit.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace fim

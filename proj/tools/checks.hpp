#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace seqcomb::checks {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::vector<std::string> notes;
    std::vector<std::string> failures;  // capped counterexample dumps
};

std::vector<std::string> suite_names();

// Throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace seqcomb::checks

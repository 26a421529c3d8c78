#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zsr::selftest {

struct Options {
    std::uint64_t seed = 20240607;
    unsigned jobs = 1;
};

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<int> criterion_ids();
CriterionResult run_criterion(int id, const Options& options = {});

/// `[PASS] C<id> <name>: <detail> (<seconds>s)`
std::string format(const CriterionResult& r);

} // namespace zsr::selftest

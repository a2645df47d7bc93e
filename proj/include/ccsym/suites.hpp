#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccsym {

inline constexpr std::uint64_t kDefaultSeed = 20020517;

struct SuiteResult {
    std::string name;
    bool pass = true;
    long trials = 0;
    std::string detail;
};

struct Suite {
    std::string name;
    std::string description;
    bool acceptance;
    SuiteResult (*run)(std::uint64_t seed);
};

const std::vector<Suite>& all_suites();
std::vector<SuiteResult> run_suites(bool acceptance_only, std::uint64_t seed);

struct CrosscheckResult {
    long trials_run = 0;
    bool ok = true;
    // first counterexample, verbatim
    std::string ring, f, g, formula_value, oracle_value;
};

CrosscheckResult run_crosscheck(long trials_per_ring, std::uint64_t seed);

}  // namespace ccsym

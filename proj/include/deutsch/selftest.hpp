// selftest.hpp
//
// Runtime invariant suite behind `deutsch selftest`: ring laws, canonical
// form, serialization round-trips, unitarity, the pipeline identities, the
// product tables, query accounting, and solver agreement. Deterministic for
// a fixed seed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace deutsch {

struct SuiteResult {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
};

inline constexpr std::uint64_t kDefaultSelfTestSeed = 20080805;

std::vector<SuiteResult> run_selftest(std::uint64_t seed = kDefaultSelfTestSeed);

}  // namespace deutsch

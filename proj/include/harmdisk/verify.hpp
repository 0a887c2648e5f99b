// Seeded property suites behind `verify`: each check draws its own RNG from
// the seed, so suites are deterministic and independently rerunnable.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmdisk/io_json.hpp"

namespace harmdisk {

struct CheckResult {
    std::string name;
    bool passed = false;
    long cases = 0;
    double worst = 0.0;  // worst margin / gap seen, sign convention per check
};

// suite: one of series, params, membership, bounds, specfun, constructions, all.
// Throws std::invalid_argument for an unknown suite name.
json run_verify(const std::string& suite, std::uint64_t seed);

bool verify_passed(const json& report);

}  // namespace harmdisk

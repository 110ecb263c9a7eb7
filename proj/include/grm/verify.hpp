#pragma once

// Invariant battery behind the `verify` subcommand: every profile route must
// agree, row sums and totals must hold, the double-transform closed form
// must match, and the linear-system structure and ranks must come out as
// predicted. Expensive exact-elimination checks are skipped (not failed)
// above a size threshold.

#include "grm/distance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grm {

enum class CheckState { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    CheckState state = CheckState::Fail;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 20240915;
    std::int64_t system_limit = 1024;   // build/check systems up to this q^(m+1)
    std::int64_t solve_limit = 512;     // exact solves and ranks up to this q^(m+1)
    std::int64_t naive_limit = 1024;    // run the quadratic transform up to this q^m
    std::int64_t kernel_limit = 256;    // kernel sweep up to this q^m
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const CheckResult& c : checks)
            if (c.state == CheckState::Fail) return false;
        return true;
    }
};

VerifyReport verify_function(const FnTable& f, const VerifyOptions& options = {});

// Individual checks, exposed so corrupted inputs can be exercised directly.
bool check_row_sums(const DistanceProfile& profile, std::string* detail = nullptr);
bool check_profiles_equal(const DistanceProfile& a, const DistanceProfile& b,
                          std::string* detail = nullptr);

}  // namespace grm

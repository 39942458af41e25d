#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "octorank/symmetry.hpp"

namespace octorank {

/// Knobs for the end-to-end verification run. The claim set itself is
/// fixed; the seed pins every random stream and the sample counts scale
/// the randomized audits (the exhaustive censuses ignore them).
struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t base_samples = 1000;
    std::size_t automorphism_count = 20;
    std::size_t derivation_count = 50;
    std::size_t composition_pairs = 10000;
};

/// Outcome of one verification claim. The data section is a deterministic
/// function of the config (timings live outside it).
struct ClaimResult {
    std::string claim_id;
    std::string description;
    /// Self-contained statement of the mathematical fact being checked.
    std::string statement;
    bool passed = false;
    bool skipped = false;
    std::string skip_reason;
    double seconds = 0.0;
    std::vector<std::pair<std::string, std::string>> data;

    void record(std::string key, std::string value) {
        data.emplace_back(std::move(key), std::move(value));
    }
    void record(std::string key, std::int64_t value) {
        data.emplace_back(std::move(key), std::to_string(value));
    }
};

struct Report {
    std::vector<ClaimResult> claims;
    double total_seconds = 0.0;

    bool all_passed() const {
        for (const ClaimResult& c : claims)
            if (!c.skipped && !c.passed) return false;
        return true;
    }
};

/// Runs the full verification suite: family dimensions, the exhaustive
/// F_3/F_5 censuses with square-class splits, division rank constancy,
/// kernel/image profiles, evaluation-map dimensions, no-rank-2
/// certificates, invariance and derivation audits, the composition law,
/// the restriction-rank dichotomy, and a deliberately corrupted table as a
/// negative control. Claim ids are unique and stable.
Report verify_all(const RunConfig& config);

std::string report_to_text(const Report& report);

}  // namespace octorank

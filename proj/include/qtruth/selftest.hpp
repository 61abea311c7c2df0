// Copyright 2026 The qtruth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtruth/tolerances.hpp"

namespace qtruth {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Deterministic for a given seed: no timing or host information is included.
struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;

    bool all_passed() const;
    /// One "PASS"/"FAIL" line per criterion.
    std::string text() const;
    nlohmann::json to_json() const;
};

struct SelftestOptions {
    std::uint64_t seed = 1;
    /// Pinned thresholds are capped at `tol.eq`; shrinking it forces failures.
    Tolerances tol{};
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SelftestOptions &opts = {});
SelftestReport run_selftest(const SelftestOptions &opts = {});

} // namespace qtruth

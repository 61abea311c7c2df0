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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qtruth/errors.hpp"
#include "qtruth/quantize.hpp"

namespace qtruth {

/// Unknown kind, malformed JSON, or parameters failing validation.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// The output artifact could not be written.
class OutputError : public Error {
  public:
    using Error::Error;
};

enum class ScenarioKind {
    sg_overlap,
    sg_three_angle,
    sg_cascade,
    sg_collapse,
    epr_sweep,
    epr_chsh,
    quantize_kernels,
    logic_tautology,
    logic_connectives,
};

std::string_view to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(std::string_view name);

enum class OutputFormat { csv, json };

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::epr_sweep;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 1;
    /// Empty path: the artifact is produced but not written.
    std::filesystem::path output;
    OutputFormat format = OutputFormat::csv;

    /// Throws ConfigError on any structural problem.
    static ScenarioConfig from_json(const nlohmann::json &j);
    static ScenarioConfig load(const std::filesystem::path &path);
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RunReport {
    std::string kind;
    nlohmann::json params;
    std::uint64_t seed = 0;
    long rows = 0;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;

    bool all_passed() const;
    nlohmann::json to_json(bool include_timing = true) const;
};

struct RunResult {
    RunReport report;
    /// Output bytes: CSV with LF endings or pretty-printed JSON.
    std::string artifact;
};

/// Evaluates a scenario without touching the filesystem.
RunResult execute(const ScenarioConfig &config);

/// execute() and write the artifact to config.output. Throws OutputError
/// when the file cannot be written.
RunReport run(const ScenarioConfig &config);

/// CSV dump of every momentum kernel on an n-site lattice: one row per
/// (k, q) with real and imaginary parts of each column interleaved.
std::string kernels_csv(const Lattice &lat);

/// "%.17g" in the C locale: the CSV number format.
std::string format_number(double x);

} // namespace qtruth

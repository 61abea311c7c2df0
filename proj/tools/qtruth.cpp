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

// qtruth command-line driver.
//
// Exit codes: 0 all checks passed and output written, 1 a check failed,
// 2 configuration/usage error, 3 output could not be written, 4 other error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qtruth/quantize.hpp"
#include "qtruth/scenario.hpp"
#include "qtruth/selftest.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kConfig = 2, kOutput = 3, kOther = 4 };

std::optional<std::uint64_t> env_seed() {
    const char *s = std::getenv("QTRUTH_SEED");
    if (s == nullptr || *s == '\0') {
        return std::nullopt;
    }
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used, 10);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || s[used] != '\0' || s[0] == '-') {
        throw qtruth::ConfigError(std::string("QTRUTH_SEED is not a nonnegative integer: '") + s + "'");
    }
    return v;
}

int cmd_run(const std::string &path, bool json) {
    qtruth::ScenarioConfig config = qtruth::ScenarioConfig::load(path);
    if (const auto seed = env_seed()) {
        config.seed = *seed;
    }
    const qtruth::RunReport report = qtruth::run(config);
    if (json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        for (const auto &c : report.checks) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) {
                std::cout << ": " << c.detail;
            }
            std::cout << "\n";
        }
        std::cout << report.kind << ": " << report.rows << " rows";
        if (!config.output.empty()) {
            std::cout << " -> " << config.output.string();
        }
        std::cout << "\n";
    }
    return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_selftest(std::optional<std::uint64_t> seed, std::optional<double> tau_eq, bool json) {
    qtruth::SelftestOptions opts;
    if (const auto env = env_seed()) {
        opts.seed = *env;
    }
    if (seed) {
        opts.seed = *seed;
    }
    if (tau_eq) {
        opts.tol.eq = *tau_eq;
    }
    const qtruth::SelftestReport report = qtruth::run_selftest(opts);
    std::cout << (json ? report.to_json().dump(2) + "\n" : report.text());
    return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_dump_kernels(long n, const std::string &output, bool json) {
    const qtruth::Lattice lat{n, 1.0, 1.0};
    try {
        lat.validate();
    } catch (const qtruth::RangeError &e) {
        throw qtruth::ConfigError(e.what());
    }
    const std::string csv = qtruth::kernels_csv(lat);
    if (output.empty() || output == "-") {
        if (!json) {
            std::cout << csv;
        }
    } else {
        std::ofstream out(output, std::ios::binary | std::ios::trunc);
        out << csv;
        out.flush();
        if (!out) {
            throw qtruth::OutputError("cannot write '" + output + "'");
        }
    }
    if (json) {
        std::cout << nlohmann::json{{"kind", "dump-kernels"}, {"n", n}, {"rows", n * n}, {"output", output}}.dump(2)
                  << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qtruth: truth operators, quantization and spin scenarios"};
    app.require_subcommand(1);

    std::string config_path;
    bool json = false;
    auto *run = app.add_subcommand("run", "Execute a scenario config");
    run->add_option("config", config_path, "Scenario JSON file")->required();
    run->add_flag("--json", json, "Print a JSON summary to stdout");

    std::optional<std::uint64_t> seed;
    std::optional<double> tau_eq;
    auto *selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_option("--seed", seed, "Random seed");
    selftest->add_option("--tau-eq", tau_eq, "Override the equality tolerance")->check(CLI::NonNegativeNumber);
    selftest->add_flag("--json", json, "Print a JSON report");

    long n = 0;
    std::string output;
    auto *dump = app.add_subcommand("dump-kernels", "Write momentum truth kernels as CSV");
    dump->add_option("--n", n, "Lattice size")->required();
    dump->add_option("--output,-o", output, "Output file (default stdout)");
    dump->add_flag("--json", json, "Print a JSON summary to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        if (*run) {
            return cmd_run(config_path, json);
        }
        if (*selftest) {
            return cmd_selftest(seed, tau_eq, json);
        }
        return cmd_dump_kernels(n, output, json);
    } catch (const qtruth::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const qtruth::OutputError &e) {
        std::cerr << "output error: " << e.what() << "\n";
        return kOutput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
}

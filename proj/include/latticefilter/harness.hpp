// Copyright 2026 The latticefilter Authors
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

#ifndef LATTICEFILTER_HARNESS_HPP
#define LATTICEFILTER_HARNESS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "latticefilter/errors.hpp"

namespace latticefilter {

constexpr const char *kVersion = "0.1.0";

/// Raised for invalid command-line configurations (exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

struct ExperimentConfig {
    std::string command;
    size_t n = 2;
    /// 0 selects the command's default.
    size_t m = 0;
    uint32_t q = 5;
    uint32_t B = 1;
    uint32_t c = 0;
    uint32_t p = 2;
    /// Error-support size for arora-ge.
    uint32_t support = 2;
    std::string family = "bounded_uniform";
    double width = 3;
    std::string mode = "ge";
    std::string method = "enumeration";
    std::vector<uint32_t> factors;
    uint64_t seed = 1;
    size_t trials = 1;
    size_t outcome_samples = 200;
    double threshold = 0.99;
    std::string out;
    std::string format = "json";
    bool no_timestamp = false;
};

/// Throws ConfigError with an actionable message.
void validate_config(const ExperimentConfig &cfg);

struct TrialRecord {
    size_t trial = 0;
    uint64_t seed = 0;
    size_t m_used = 0;
    size_t constraints_collected = 0;
    bool success = false;
    /// Checked against the planted instance.
    bool verified = false;
    /// A solution was returned and it is wrong.
    bool wrong = false;
    double wall_time = 0;
    /// Command-specific numbers, printed in key order.
    std::map<std::string, double> metrics;
    std::string note;
};

struct RunRecord {
    ExperimentConfig config;
    std::vector<TrialRecord> trials;
    size_t successes = 0;
    size_t verified = 0;
    size_t wrong = 0;
    std::string version = kVersion;
    std::string timestamp;
};

/// Seed of trial t under master seed s.
uint64_t trial_seed(uint64_t master, size_t trial);

/// One seeded trial of cfg.command. Deterministic in (cfg, trial).
TrialRecord run_trial(const ExperimentConfig &cfg, size_t trial);

/// Runs cfg.trials trials in index order.
RunRecord cmd_solve(const ExperimentConfig &cfg);

/// JSON: one object per trial and a final summary object. CSV: one row per trial.
void write_run_record(std::ostream &out, const RunRecord &record);

/// figure2 CSV for q and width (defaults 31 and 3).
void cmd_figure2(std::ostream &out, uint32_t q = 31, double width = 3);

/// GSO lower bound sweep over q in {5, ..., 31}, the four figure2 families and
/// widths {1, 2, 3}, plus the delta amplitude.
void cmd_bounds(std::ostream &out);

/// Default sample budget for cfg.command when cfg.m is 0.
size_t default_m(const ExperimentConfig &cfg);

}  // namespace latticefilter

#endif

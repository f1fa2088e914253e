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

// Sweeps the sample count m for the calibrated configurations and prints the
// success rate at each grid point. The frozen values live in
// include/latticefilter/calibration.hpp.

#include <CLI11.hpp>
#include <iostream>

#include "latticefilter/calibration.hpp"
#include "latticefilter/harness.hpp"

using namespace latticefilter;

int main(int argc, char **argv) {
    CLI::App app{"calibrate sample counts"};
    std::string target = "slwe-ag";
    size_t trials = 100;
    std::vector<size_t> grid;
    app.add_option("target", target, "slwe-ag, clwe-ge, clwe-ag, edcp-ag, friedl");
    app.add_option("--trials", trials);
    app.add_option("--grid", grid, "m values to try")->delimiter(',')->required();
    CLI11_PARSE(app, argc, argv);

    ExperimentConfig cfg;
    cfg.seed = calibration::kCalibrationSeed;
    cfg.trials = trials;
    cfg.no_timestamp = true;
    if (target == "slwe-ag") {
        cfg.command = "slwe-ag";
        cfg.n = 2, cfg.q = 7, cfg.B = 2;
    } else if (target == "clwe-ge") {
        cfg.command = "clwe";
        cfg.n = 2, cfg.q = 5, cfg.B = 1, cfg.mode = "ge", cfg.trials = 1;
    } else if (target == "clwe-ag") {
        cfg.command = "clwe";
        cfg.n = 2, cfg.q = 7, cfg.B = 2, cfg.mode = "ag", cfg.trials = 1;
    } else if (target == "edcp-ag") {
        cfg.command = "edcp";
        cfg.n = 3, cfg.q = 7, cfg.c = 2, cfg.mode = "ag";
    } else if (target == "friedl") {
        cfg.command = "friedl";
        cfg.n = 3, cfg.q = 3, cfg.p = 2;
    } else {
        std::cerr << "unknown target\n";
        return 2;
    }
    for (size_t m : grid) {
        cfg.m = m;
        RunRecord run = cmd_solve(cfg);
        std::cout << target << " m=" << m << " successes=" << run.successes << " verified=" << run.verified
                  << " wrong=" << run.wrong << "/" << run.trials.size();
        for (const auto &kv : run.trials[0].metrics) {
            std::cout << " " << kv.first << "=" << kv.second;
        }
        std::cout << "\n";
    }
    return 0;
}

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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "latticefilter/harness.hpp"

using namespace latticefilter;

namespace {

void add_common(CLI::App *sub, ExperimentConfig &cfg) {
    sub->add_option("--n", cfg.n, "dimension");
    sub->add_option("--m", cfg.m, "samples (0 = documented default)");
    sub->add_option("--q", cfg.q, "modulus");
    sub->add_option("--B", cfg.B, "amplitude bound");
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--trials", cfg.trials, "number of trials");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_flag("--no-timestamp", cfg.no_timestamp, "omit timestamps and wall times");
}

int emit(const std::string &path, const std::function<void(std::ostream &)> &write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        return 2;
    }
    write(f);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"latticefilter: simulator for filtering-based quantum lattice algorithms"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::vector<CLI::App *> solvers;
    auto slwe_ge = app.add_subcommand("slwe-ge", "S|LWE> by full filtering and elimination");
    add_common(slwe_ge, cfg);
    slwe_ge->add_option("--family", cfg.family, "bounded_uniform, dft_uniform, gaussian, laplace, super_gaussian");
    slwe_ge->add_option("--width", cfg.width, "width for gaussian-like families");
    solvers.push_back(slwe_ge);

    auto slwe_ag = app.add_subcommand("slwe-ag", "S|LWE> with dft(bounded uniform) by partial filtering and Arora-Ge");
    add_common(slwe_ag, cfg);
    solvers.push_back(slwe_ag);

    auto clwe = app.add_subcommand("clwe", "C|LWE> fidelity over all secrets");
    add_common(clwe, cfg);
    clwe->add_option("--mode", cfg.mode, "ge or ag");
    clwe->add_option("--outcome-samples", cfg.outcome_samples, "measurement samples per secret");
    clwe->add_option("--threshold", cfg.threshold, "fidelity counted as success");
    solvers.push_back(clwe);

    auto sisq = app.add_subcommand("sis-quantum", "sample the SIS solution state");
    add_common(sisq, cfg);
    sisq->add_option("--method", cfg.method, "enumeration or rejection");
    solvers.push_back(sisq);

    auto sisc = app.add_subcommand("sis-composite", "classical SIS for composite modulus by lifting");
    add_common(sisc, cfg);
    sisc->add_option("--factors", cfg.factors, "prime factors of q")->delimiter(',');
    solvers.push_back(sisc);

    auto edcp = app.add_subcommand("edcp", "EDCP with D uniform over [0, q-c)");
    add_common(edcp, cfg);
    edcp->add_option("--c", cfg.c, "window shortfall");
    edcp->add_option("--mode", cfg.mode, "ge or ag");
    solvers.push_back(edcp);

    auto friedl = app.add_subcommand("friedl", "constant-q EDCP with window p");
    add_common(friedl, cfg);
    friedl->add_option("--p", cfg.p, "window size");
    solvers.push_back(friedl);

    auto ag = app.add_subcommand("arora-ge", "classical Arora-Ge with support {0..support-1}");
    add_common(ag, cfg);
    ag->add_option("--support", cfg.support, "support size");
    solvers.push_back(ag);

    std::string fig_out;
    uint32_t fig_q = 31;
    double fig_width = 3;
    auto fig = app.add_subcommand("figure2", "GSO norm profile CSV for four families");
    fig->add_option("--out", fig_out, "output path (default stdout)");
    fig->add_option("--q", fig_q, "modulus");
    fig->add_option("--width", fig_width, "family width");

    std::string bounds_out;
    auto bounds = app.add_subcommand("bounds", "GSO lower bound sweep CSV");
    bounds->add_option("--out", bounds_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fig->parsed()) {
            return emit(fig_out, [&](std::ostream &o) { cmd_figure2(o, fig_q, fig_width); });
        }
        if (bounds->parsed()) {
            return emit(bounds_out, [&](std::ostream &o) { cmd_bounds(o); });
        }
        for (auto *sub : solvers) {
            if (sub->parsed()) {
                cfg.command = sub->get_name();
            }
        }
        RunRecord run = cmd_solve(cfg);
        int rc = emit(cfg.out, [&](std::ostream &o) { write_run_record(o, run); });
        if (rc != 0) {
            return rc;
        }
        if (cfg.trials == 1 && !run.trials[0].success) {
            std::cerr << "solver failure: " << run.trials[0].note << "\n";
            return 3;
        }
        return 0;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BadParameter &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CompositeModulus &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ScaleExceeded &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

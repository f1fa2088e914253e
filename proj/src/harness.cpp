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

#include "latticefilter/harness.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <json.hpp>
#include <numeric>
#include <ostream>
#include <set>

#include "latticefilter/calibration.hpp"
#include "latticefilter/edcp.hpp"
#include "latticefilter/sis.hpp"
#include "latticefilter/slwe.hpp"

namespace latticefilter {

namespace {

const std::set<std::string> kCommands = {"slwe-ge", "slwe-ag",   "clwe",   "sis-quantum", "sis-composite",
                                         "edcp",    "friedl",    "arora-ge"};

uint64_t binomial(uint64_t n, uint64_t k) {
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

uint64_t composite_q(const ExperimentConfig &cfg) {
    uint64_t q = 1;
    for (uint32_t p : cfg.factors) {
        q *= p;
    }
    return q;
}

Amplitude family_amplitude(const ExperimentConfig &cfg) {
    Modulus q(cfg.q);
    const std::string &f = cfg.family;
    if (f == "bounded_uniform" || f == "uniform") {
        return make_amplitude(family::BoundedUniform{cfg.B}, q);
    }
    if (f == "dft_uniform") {
        return dft(make_amplitude(family::BoundedUniform{cfg.B}, q));
    }
    if (f == "gaussian") {
        return make_amplitude(family::Gaussian{cfg.width}, q);
    }
    if (f == "laplace") {
        return make_amplitude(family::Laplace{cfg.width}, q);
    }
    if (f == "super_gaussian") {
        return make_amplitude(family::SuperGaussian{cfg.width, 1.5}, q);
    }
    if (f == "delta") {
        return make_amplitude(family::Delta{0}, q);
    }
    throw ConfigError("unknown family '" + f + "'");
}

/// Tail-path heuristic: a few times the Arora-Ge unknown count divided by
/// the per-sample tail rate (k-th GSO norm squared over q).
size_t tail_default_m(size_t n, uint32_t q, const Amplitude &f, size_t k) {
    double g = gso(build_shift_columns(f, 0, k)).norms[k - 1];
    double rate = g * g / q;
    uint64_t unknowns = binomial(n + q - k + 1, q - k + 1) - 1;
    return (size_t)std::ceil(4.0 * unknowns / rate);
}

}  // namespace

uint64_t trial_seed(uint64_t master, size_t trial) {
    return derive_seed(master, trial, StreamRole::Instance);
}

void validate_config(const ExperimentConfig &cfg) {
    if (!kCommands.count(cfg.command)) {
        throw ConfigError("unknown command '" + cfg.command + "'");
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        throw ConfigError("--format must be json or csv");
    }
    if (cfg.trials < 1) {
        throw ConfigError("--trials must be at least 1");
    }
    if (cfg.n < 1) {
        throw ConfigError("--n must be at least 1");
    }
    if (cfg.command == "sis-composite") {
        if (cfg.factors.empty()) {
            throw ConfigError("sis-composite needs --factors, e.g. --factors 2,3");
        }
        for (uint32_t p : cfg.factors) {
            if (p < 2) {
                throw ConfigError("every factor must be at least 2");
            }
        }
        if (composite_q(cfg) > kMaxModulus) {
            throw ConfigError("product of factors exceeds 65536");
        }
        if (cfg.n < 2) {
            throw ConfigError("sis-composite needs n >= 2 (A has n-1 rows)");
        }
        if (std::pow((double)cfg.n, (double)cfg.factors.size()) > 100000) {
            throw ConfigError("m = n^k exceeds 10^5");
        }
        return;
    }
    if (cfg.q < 2 || cfg.q > kMaxModulus) {
        throw ConfigError("--q must be in [2, 65536]");
    }
    if (!is_prime(cfg.q)) {
        throw ConfigError("--q must be prime for " + cfg.command);
    }
    uint64_t w = 2 * (uint64_t)cfg.B + 1;
    const std::string &c = cfg.command;
    if (c == "slwe-ge" || (c == "clwe" && cfg.mode == "ge")) {
        if (cfg.family == "bounded_uniform" && std::gcd(w, (uint64_t)cfg.q) != 1) {
            throw ConfigError(
                "elimination path needs gcd(2B+1, q) = 1: otherwise the DFT of the bounded uniform amplitude "
                "vanishes somewhere, eta = 0 and the full filter does not exist");
        }
    }
    if ((c == "slwe-ag" || c == "clwe" || c == "sis-quantum") && w > cfg.q) {
        throw ConfigError("need 2B+1 <= q");
    }
    if (c == "clwe") {
        if (cfg.mode != "ge" && cfg.mode != "ag") {
            throw ConfigError("--mode must be ge or ag");
        }
        if (std::pow((double)cfg.q, (double)cfg.n) > 1e6) {
            throw ConfigError("clwe enumerates all secrets: q^n must be at most 10^6");
        }
    }
    if (c == "sis-quantum" && cfg.method != "enumeration" && cfg.method != "rejection") {
        throw ConfigError("--method must be enumeration or rejection");
    }
    if (c == "edcp") {
        if (cfg.mode != "ge" && cfg.mode != "ag") {
            throw ConfigError("--mode must be ge or ag");
        }
        if (cfg.c >= cfg.q) {
            throw ConfigError("need c < q (D is uniform over [0, q-c))");
        }
        if (cfg.mode == "ge" && cfg.c != 0) {
            throw ConfigError(
                "edcp ge needs c = 0: for c > 0 the shift set of dft(D) has rank q-c < q, so the full filter "
                "does not exist; use --mode ag");
        }
    }
    if (c == "friedl" && !(cfg.p > 1 && cfg.p < cfg.q)) {
        throw ConfigError("friedl needs 1 < p < q");
    }
    if (c == "arora-ge" && !(cfg.support >= 1 && cfg.support < cfg.q)) {
        throw ConfigError("arora-ge needs 1 <= support < q");
    }
}

size_t default_m(const ExperimentConfig &cfg) {
    namespace cal = calibration;
    const std::string &c = cfg.command;
    if (c == "slwe-ge") {
        double eta = min_abs_dft(family_amplitude(cfg)).value;
        return (size_t)std::ceil(40.0 * cfg.n * cfg.q / (eta * eta));
    }
    if (c == "slwe-ag") {
        if (cfg.n == 2 && cfg.q == 7 && cfg.B == 2) {
            return cal::kSlweAgM;
        }
        size_t k = 2 * cfg.B + 1;
        if (k == cfg.q) {
            return 4 * cfg.n;
        }
        return tail_default_m(cfg.n, cfg.q, dft(make_amplitude(family::BoundedUniform{cfg.B}, Modulus(cfg.q))), k);
    }
    if (c == "clwe") {
        if (cfg.mode == "ge") {
            if (cfg.n == 2 && cfg.q == 5 && cfg.B == 1) {
                return cal::kClweGeM;
            }
            double eta = min_abs_dft(make_amplitude(family::BoundedUniform{cfg.B}, Modulus(cfg.q))).value;
            return (size_t)std::ceil(10.0 * cfg.n * cfg.q / (eta * eta));
        }
        if (cfg.n == 2 && cfg.q == 7 && cfg.B == 2) {
            return cal::kClweAgM;
        }
        size_t k = 2 * cfg.B + 1;
        return tail_default_m(cfg.n, cfg.q, dft(make_amplitude(family::BoundedUniform{cfg.B}, Modulus(cfg.q))), k);
    }
    if (c == "sis-quantum") {
        return 8;
    }
    if (c == "sis-composite") {
        return (size_t)std::llround(std::pow((double)cfg.n, (double)cfg.factors.size()));
    }
    if (c == "edcp") {
        if (cfg.mode == "ge") {
            double eta = min_abs_dft(dft(edcp_window(Modulus(cfg.q), cfg.q))).value;
            return (size_t)std::ceil(40.0 * cfg.n * cfg.q / (eta * eta));
        }
        if (cfg.n == 3 && cfg.q == 7 && cfg.c == 2) {
            return cal::kEdcpAgM;
        }
        Amplitude f = dft(edcp_window(Modulus(cfg.q), cfg.q - cfg.c));
        return tail_default_m(cfg.n, cfg.q, f, cfg.q - cfg.c);
    }
    if (c == "friedl") {
        if (cfg.n == 3 && cfg.q == 3 && cfg.p == 2) {
            return cal::kFriedlM;
        }
        uint64_t unknowns = binomial(cfg.n + cfg.q - 2, cfg.q - 1);
        return (size_t)(4 * unknowns * cfg.p);
    }
    // arora-ge
    return 3 * (binomial(cfg.n + cfg.support, cfg.support) - 1);
}

TrialRecord run_trial(const ExperimentConfig &cfg, size_t trial) {
    TrialRecord rec;
    rec.trial = trial;
    rec.seed = trial_seed(cfg.seed, trial);
    auto start = std::chrono::steady_clock::now();
    size_t m = cfg.m ? cfg.m : default_m(cfg);
    Rng inst(rec.seed, 0, StreamRole::Instance);
    const std::string &c = cfg.command;

    auto take_report = [&](const SlweReport &r, const ZqVector &planted) {
        rec.m_used = r.m_used;
        rec.constraints_collected = r.constraints_collected;
        rec.success = r.secret.has_value();
        rec.verified = rec.success && *r.secret == planted;
        rec.wrong = rec.success && !rec.verified;
        rec.note = r.failure;
        size_t violations = 0;
        for (const auto &rc : r.constraints) {
            violations += !rc.constraint.satisfied_by(rc.a.dot(planted));
        }
        rec.metrics["constraint_violations"] = (double)violations;
    };

    Modulus q(c == "sis-composite" ? (uint32_t)composite_q(cfg) : cfg.q);
    if (c == "slwe-ge") {
        Amplitude f = family_amplitude(cfg);
        auto u = ZqVector::random(q, cfg.n, inst);
        take_report(slwe_solve_ge(planted_source(f, u, rec.seed), cfg.n, q, f, m, rec.seed), u);
    } else if (c == "slwe-ag") {
        Amplitude f = dft(make_amplitude(family::BoundedUniform{cfg.B}, q));
        auto u = ZqVector::random(q, cfg.n, inst);
        take_report(slwe_solve_ag(planted_source(f, u, rec.seed), cfg.n, q, cfg.B, m, rec.seed), u);
    } else if (c == "clwe") {
        bool ge = cfg.mode == "ge";
        Amplitude f = make_amplitude(family::BoundedUniform{cfg.B}, q);
        if (!ge) {
            f = dft(f);
        }
        auto a = ZqMatrix::random(q, cfg.n, m, inst);
        auto r = clwe_simulate(a, f, ge ? DecoderMode::GaussianElimination : DecoderMode::AroraGe, rec.seed,
                               cfg.outcome_samples);
        rec.m_used = m;
        rec.metrics["fidelity"] = r.fidelity;
        rec.metrics["sigma"] = r.sigma;
        rec.metrics["secrets"] = (double)r.secrets;
        rec.success = r.fidelity >= cfg.threshold;
        rec.verified = true;
    } else if (c == "sis-quantum") {
        auto a = ZqMatrix::random(q, cfg.n, m, inst);
        auto method = cfg.method == "rejection" ? SisMethod::Rejection : SisMethod::Enumeration;
        Rng rng(rec.seed, 0, StreamRole::Measurement);
        IntVector z = sis_state_sample(a, cfg.B, rng, method);
        bool in_kernel = a.apply(z) == ZqVector::zeros(q, cfg.n);
        int64_t norm = 0;
        for (int64_t v : z) {
            norm = std::max<int64_t>(norm, std::llabs(v));
        }
        rec.m_used = m;
        rec.verified = in_kernel && norm <= (int64_t)cfg.B;
        rec.success = rec.verified && norm > 0;
        rec.wrong = !rec.verified;
        rec.metrics["linf"] = (double)norm;
    } else if (c == "sis-composite") {
        auto a = ZqMatrix::random(q, cfg.n - 1, m, inst);
        uint32_t beta = 1;
        for (uint32_t p : cfg.factors) {
            beta *= p / 2;
        }
        auto r = sis_solve_composite(a, cfg.factors);
        int64_t norm = 0;
        for (int64_t v : r.x) {
            norm = std::max<int64_t>(norm, std::llabs(v));
        }
        rec.m_used = m;
        rec.success = true;
        rec.verified = is_sis_solution({a, beta}, r.x);
        rec.wrong = !rec.verified;
        rec.metrics["linf"] = (double)norm;
        rec.metrics["beta"] = beta;
    } else if (c == "edcp") {
        Amplitude D = edcp_window(q, cfg.q - cfg.c);
        auto s = ZqVector::random(q, cfg.n, inst);
        auto set = EdcpSampleSet::random(cfg.n, m, D, s, inst);
        auto mode = cfg.mode == "ge" ? EdcpSolveMode::GaussianElimination : EdcpSolveMode::AroraGe;
        auto r = edcp_solve(set, mode, rec.seed);
        rec.m_used = r.m_used;
        rec.constraints_collected = r.constraints_collected;
        rec.success = r.secret.has_value();
        rec.verified = rec.success && *r.secret == s;
        rec.wrong = rec.success && !rec.verified;
        rec.note = r.failure;
    } else if (c == "friedl") {
        Amplitude D = edcp_window(q, cfg.p);
        ZqVector s = ZqVector::random(q, cfg.n, inst);
        while (s == ZqVector::zeros(q, cfg.n)) {
            s = ZqVector::random(q, cfg.n, inst);
        }
        auto set = EdcpSampleSet::random(cfg.n, m, D, s, inst);
        rec.m_used = m;
        try {
            auto r = friedl_constant_q(set, cfg.p, rec.seed);
            size_t violations = 0;
            for (const auto &smp : r.samples) {
                violations += smp.z != 0 && smp.y.dot(s) == 0;
            }
            rec.constraints_collected = r.samples.size() - r.zero_outcomes;
            bool in_class = std::find(r.candidates.begin(), r.candidates.end(), s) != r.candidates.end();
            // When the likelihood ties (always for p = 2) the run reports the
            // candidate class and is verified if the planted secret is in it.
            rec.success = r.secret.has_value() || !r.candidates.empty();
            rec.verified = r.secret ? *r.secret == s : in_class;
            rec.wrong = rec.success && !rec.verified;
            rec.metrics["zero_outcomes"] = (double)r.zero_outcomes;
            rec.metrics["violations"] = (double)violations;
            rec.metrics["candidates"] = (double)r.candidates.size();
            rec.metrics["secret_in_candidates"] = in_class;
            rec.note = r.failure;
        } catch (const InsufficientSamples &e) {
            rec.note = e.what();
        }
    } else {
        std::vector<Elem> support(cfg.support);
        std::iota(support.begin(), support.end(), 0);
        auto u = ZqVector::random(q, cfg.n, inst);
        std::vector<LweSample> samples;
        for (size_t i = 0; i < m; i++) {
            auto a = ZqVector::random(q, cfg.n, inst);
            samples.push_back({a, q.add(a.dot(u), support[inst.below(support.size())])});
        }
        auto r = arora_ge(samples, support, cfg.n, q);
        rec.m_used = m;
        rec.constraints_collected = m;
        rec.success = std::holds_alternative<ZqVector>(r);
        rec.verified = rec.success && std::get<ZqVector>(r) == u;
        rec.wrong = rec.success && !rec.verified;
        if (!rec.success) {
            rec.note = std::get<Failure>(r).reason;
        }
    }
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

RunRecord cmd_solve(const ExperimentConfig &cfg) {
    validate_config(cfg);
    RunRecord run;
    run.config = cfg;
    if (!cfg.no_timestamp) {
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        run.timestamp = buf;
    }
    for (size_t t = 0; t < cfg.trials; t++) {
        run.trials.push_back(run_trial(cfg, t));
        run.successes += run.trials.back().success;
        run.verified += run.trials.back().verified;
        run.wrong += run.trials.back().wrong;
    }
    return run;
}

namespace {

nlohmann::ordered_json params_json(const ExperimentConfig &cfg) {
    nlohmann::ordered_json p;
    p["n"] = cfg.n;
    p["m"] = cfg.m ? cfg.m : default_m(cfg);
    p["q"] = cfg.command == "sis-composite" ? composite_q(cfg) : cfg.q;
    const std::string &c = cfg.command;
    if (c == "slwe-ge") {
        p["family"] = cfg.family;
        p["B"] = cfg.B;
        p["width"] = cfg.width;
    }
    if (c == "slwe-ag" || c == "clwe" || c == "sis-quantum") {
        p["B"] = cfg.B;
    }
    if (c == "clwe" || c == "edcp") {
        p["mode"] = cfg.mode;
    }
    if (c == "clwe") {
        p["outcome_samples"] = cfg.outcome_samples;
    }
    if (c == "sis-quantum") {
        p["method"] = cfg.method;
    }
    if (c == "sis-composite") {
        p["factors"] = cfg.factors;
    }
    if (c == "edcp") {
        p["c"] = cfg.c;
    }
    if (c == "friedl") {
        p["p"] = cfg.p;
    }
    if (c == "arora-ge") {
        p["support"] = cfg.support;
    }
    return p;
}

}  // namespace

void write_run_record(std::ostream &out, const RunRecord &run) {
    const auto &cfg = run.config;
    if (cfg.format == "csv") {
        out << "trial,seed,m_used,constraints_collected,success,verified";
        std::vector<std::string> keys;
        if (!run.trials.empty()) {
            for (const auto &kv : run.trials[0].metrics) {
                keys.push_back(kv.first);
                out << ',' << kv.first;
            }
        }
        if (!cfg.no_timestamp) {
            out << ",wall_time";
        }
        out << '\n';
        for (const auto &t : run.trials) {
            out << t.trial << ',' << t.seed << ',' << t.m_used << ',' << t.constraints_collected << ','
                << (t.success ? "true" : "false") << ',' << (t.verified ? "true" : "false");
            for (const auto &k : keys) {
                auto it = t.metrics.find(k);
                out << ',' << (it == t.metrics.end() ? std::string() : format_double(it->second));
            }
            if (!cfg.no_timestamp) {
                out << ',' << format_double(t.wall_time);
            }
            out << '\n';
        }
        return;
    }
    auto params = params_json(cfg);
    for (const auto &t : run.trials) {
        nlohmann::ordered_json j;
        j["problem"] = cfg.command;
        j["params"] = params;
        j["seed"] = t.seed;
        j["trial"] = t.trial;
        j["m_used"] = t.m_used;
        j["constraints_collected"] = t.constraints_collected;
        j["success"] = t.success;
        j["verified"] = t.verified;
        if (!t.metrics.empty()) {
            j["metrics"] = t.metrics;
        }
        if (!t.note.empty()) {
            j["note"] = t.note;
        }
        if (!cfg.no_timestamp) {
            j["wall_time"] = t.wall_time;
        }
        out << j.dump() << '\n';
    }
    nlohmann::ordered_json s;
    s["problem"] = cfg.command;
    s["params"] = params;
    s["seed"] = cfg.seed;
    s["summary"] = {{"trials", run.trials.size()},
                    {"successes", run.successes},
                    {"verified", run.verified},
                    {"wrong", run.wrong}};
    s["version"] = run.version;
    if (!cfg.no_timestamp) {
        s["timestamp"] = run.timestamp;
    }
    out << s.dump() << '\n';
}

void cmd_figure2(std::ostream &out, uint32_t q, double width) {
    Modulus mod(q);
    uint32_t B = (uint32_t)std::lround(width);
    auto uniform = make_amplitude(family::BoundedUniform{B}, mod);
    write_figure2_csv(out, {
                               figure2_rows("gaussian", make_amplitude(family::Gaussian{width}, mod)),
                               figure2_rows("laplace", make_amplitude(family::Laplace{width}, mod)),
                               figure2_rows("uniform", uniform),
                               figure2_rows("dft_uniform", dft(uniform)),
                           });
}

void cmd_bounds(std::ostream &out) {
    out << "q,family,width,bound_case,k,eigen_min,bound,actual_last_gso_norm,bound_satisfied\n";
    for (uint32_t q : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        Modulus mod(q);
        std::vector<std::pair<std::string, Amplitude>> rows;
        rows.push_back({"delta", make_amplitude(family::Delta{0}, mod)});
        for (uint32_t w : {1u, 2u, 3u}) {
            rows.push_back({"gaussian(" + std::to_string(w) + ")", make_amplitude(family::Gaussian{(double)w}, mod)});
            rows.push_back({"laplace(" + std::to_string(w) + ")", make_amplitude(family::Laplace{(double)w}, mod)});
            if (2 * w + 1 <= q) {
                auto u = make_amplitude(family::BoundedUniform{w}, mod);
                rows.push_back({"uniform(" + std::to_string(w) + ")", u});
                rows.push_back({"dft_uniform(" + std::to_string(w) + ")", dft(u)});
            }
        }
        for (const auto &[name, f] : rows) {
            BoundCheck b = check_gso_lower_bound(f);
            if (!b.applicable) {
                continue;
            }
            auto open = name.find('(');
            std::string fam = open == std::string::npos ? name : name.substr(0, open);
            std::string width = open == std::string::npos ? "" : name.substr(open + 1, name.size() - open - 2);
            out << q << ',' << fam << ',' << width << ',' << b.bound_case << ',' << b.k << ','
                << format_double(b.eigen_min) << ',' << format_double(b.bound) << ',' << format_double(b.actual)
                << ',' << (b.satisfied ? "true" : "false") << '\n';
        }
    }
}

}  // namespace latticefilter

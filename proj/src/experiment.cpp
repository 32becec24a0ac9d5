// Copyright 2026 The qem authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qem/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>

#include "qem/benchmarks.hpp"
#include "qem/cutting.hpp"
#include "qem/density.hpp"
#include "qem/errors.hpp"
#include "qem/esp.hpp"
#include "qem/metrics.hpp"
#include "qem/mitigation.hpp"

namespace qem {

namespace {

constexpr const char *kMethodNames[] = {
    "noisy",    "rzne", "rzne_topk",         "slzne",    "slzne_topk",
    "pipeline", "dzne", "cutqc_unmitigated", "cutqc_cm", "cutqc_mc",
};

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

bool is_cut_method(Method m) {
    return m == Method::cutqc_unmitigated || m == Method::cutqc_cm ||
           m == Method::cutqc_mc;
}

std::vector<StateWeight> top_states_of(const std::vector<double> &dist,
                                       int width, std::size_t limit) {
    std::vector<std::size_t> idx(dist.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&dist](std::size_t a, std::size_t b) {
                         return dist[a] > dist[b];
                     });
    idx.resize(std::min(limit, idx.size()));
    std::vector<StateWeight> out;
    for (std::size_t s : idx) {
        StateWeight w;
        w.state = s;
        for (int q = width - 1; q >= 0; --q) {
            w.bits.push_back(((s >> q) & 1) ? '1' : '0');
        }
        w.probability = dist[s];
        out.push_back(std::move(w));
    }
    return out;
}

nlohmann::json config_to_json(const ExperimentConfig &cfg) {
    nlohmann::json j;
    j["benchmark"] = cfg.benchmark;
    j["qubits"] = cfg.qubits;
    j["param"] = cfg.param;
    j["noise"] = noise_config_to_json(cfg.noise);
    nlohmann::json methods = nlohmann::json::array();
    for (Method m : cfg.methods) methods.push_back(method_name(m));
    j["methods"] = methods;
    j["observable"] = cfg.observable;
    j["top_k"] = cfg.top_k;
    j["esp_threshold"] = cfg.esp_threshold;
    j["latency_fraction"] = cfg.latency_fraction;
    j["max_cuts"] = cfg.max_cuts;
    j["seed"] = cfg.seed;
    j["sampled"] = cfg.sampled;
    j["shots"] = cfg.shots;
    j["placement"] = cfg.placement;
    return j;
}

} // namespace

const char *method_name(Method m) {
    return kMethodNames[static_cast<int>(m)];
}

Method method_from_name(const std::string &name) {
    for (int i = 0; i < static_cast<int>(std::size(kMethodNames)); ++i) {
        if (name == kMethodNames[i]) return static_cast<Method>(i);
    }
    throw ConfigError("unknown method: " + name);
}

void validate_config(const ExperimentConfig &cfg) {
    if (cfg.methods.empty()) {
        throw ConfigError("at least one method is required");
    }
    if (cfg.benchmark == "ghz" && !cfg.observable.empty()) {
        throw ConfigError(
            "ghz rows report distribution fidelity, not an observable; "
            "remove the explicit observable");
    }
    if (cfg.top_k < 0) {
        throw ConfigError("top_k must be nonnegative");
    }
    if (!(cfg.esp_threshold > 0.0 && cfg.esp_threshold < 1.0)) {
        throw ConfigError("esp_threshold must lie in (0, 1)");
    }
    if (cfg.latency_fraction <= 0.0) {
        throw ConfigError("latency_fraction must be positive");
    }
    if (cfg.sampled && cfg.shots == 0) {
        throw ConfigError("sampled runs need at least one shot");
    }
}

ExperimentConfig config_from_json(const nlohmann::json &j) {
    ExperimentConfig cfg;
    cfg.benchmark = j.value("benchmark", cfg.benchmark);
    cfg.qubits = j.value("qubits", cfg.qubits);
    cfg.param = j.value("param", cfg.param);
    if (j.contains("noise")) cfg.noise = noise_config_from_json(j.at("noise"));
    if (j.contains("methods")) {
        cfg.methods.clear();
        for (const auto &m : j.at("methods")) {
            cfg.methods.push_back(method_from_name(m.get<std::string>()));
        }
    }
    cfg.observable = j.value("observable", cfg.observable);
    cfg.top_k = j.value("top_k", cfg.top_k);
    cfg.esp_threshold = j.value("esp_threshold", cfg.esp_threshold);
    cfg.latency_fraction = j.value("latency_fraction", cfg.latency_fraction);
    cfg.max_cuts = j.value("max_cuts", cfg.max_cuts);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.sampled = j.value("sampled", cfg.sampled);
    cfg.shots = j.value("shots", cfg.shots);
    cfg.placement = j.value("placement", cfg.placement);
    return cfg;
}

ExperimentReport run_experiment(const ExperimentConfig &cfg,
                                const DeviceModel &d) {
    validate_config(cfg);
    validate_device(d);

    const Circuit c = generate_benchmark(cfg.benchmark, cfg.qubits, cfg.param);
    const bool is_ghz = cfg.benchmark == "ghz";
    const PauliString obs = cfg.observable.empty()
                                ? all_z(c.width)
                                : parse_pauli(cfg.observable);
    if (obs.width != c.width) {
        throw ConfigError("observable width does not match the circuit");
    }

    // The experiment binds to one device window up front; fragments of a
    // cut circuit are placed separately by their own widths.
    const int offset = cfg.placement ? place(d, c.width) : 0;
    const DeviceModel dev =
        cfg.placement ? d.window(offset, c.width) : d;

    NoiseConfig off;
    off.depolarizing_enabled = false;
    off.thermal_enabled = false;
    off.readout_enabled = false;

    ExperimentReport rep;
    rep.config = cfg;
    rep.ideal_distribution = simulate(c, dev, off).probabilities;
    rep.ideal_expectation = expectation(rep.ideal_distribution, obs);

    SimResult noisy_run = simulate(c, dev, cfg.noise);
    rep.latency_ns = noisy_run.latency_ns;
    std::vector<double> noisy = std::move(noisy_run.probabilities);
    if (cfg.sampled) {
        noisy = empirical_distribution(
            sample_counts(noisy, cfg.shots, cfg.seed));
    }

    rep.esp = compute_esp(c, dev, cfg.noise.depolarizing_scale);
    rep.reliability = effective_reliability(c, dev, cfg.noise);
    const double noisy_expectation = expectation(noisy, obs);

    // One shared cut execution for every cutqc_* method; a failed search is
    // attributed to each of those method rows.
    bool want_cut = std::any_of(cfg.methods.begin(), cfg.methods.end(),
                                is_cut_method);
    std::optional<CutExecution> exec;
    std::string cut_code, cut_msg;
    if (want_cut) {
        try {
            exec = run_cut_variants(c, d, cfg.noise, cfg.max_cuts,
                                    cfg.placement);
            if (cfg.sampled) {
                std::uint64_t variant = 0;
                for (auto *dists : {&exec->up_dists, &exec->down_dists}) {
                    for (std::vector<double> &p : *dists) {
                        p = empirical_distribution(sample_counts(
                            p, cfg.shots, cfg.seed + variant));
                        ++variant;
                    }
                }
            }
        } catch (const Error &e) {
            cut_code = e.code();
            cut_msg = e.what();
        }
    }

    MitigationConfig mc;
    mc.top_k = cfg.top_k;
    mc.esp_threshold = cfg.esp_threshold;
    mc.slzne_latency_fraction = cfg.latency_fraction;
    mc.max_cuts = cfg.max_cuts;
    mc.use_placement = cfg.placement;

    for (Method m : cfg.methods) {
        MethodResult res;
        res.method = m;
        try {
            std::optional<double> direct_expectation;
            switch (m) {
            case Method::noisy:
                res.distribution = noisy;
                break;
            case Method::rzne:
                res.distribution = rzne_state(noisy, rep.reliability, 0);
                break;
            case Method::rzne_topk:
                res.distribution =
                    rzne_state(noisy, rep.reliability, cfg.top_k);
                break;
            case Method::slzne:
                res.distribution =
                    slzne_state(noisy, rep.latency_ns, dev.median_t1(), 0);
                break;
            case Method::slzne_topk:
                res.distribution = slzne_state(noisy, rep.latency_ns,
                                               dev.median_t1(), cfg.top_k);
                break;
            case Method::pipeline: {
                PipelineResult pr = mitigate_pipeline(c, d, cfg.noise, mc);
                res.distribution = std::move(pr.probabilities);
                res.note = pr.route;
                break;
            }
            case Method::dzne:
                direct_expectation = dzne_baseline(c, dev, cfg.noise, obs);
                break;
            case Method::cutqc_unmitigated:
            case Method::cutqc_cm:
            case Method::cutqc_mc: {
                if (!exec) {
                    res.ok = false;
                    res.error_code = cut_code;
                    res.error_message = cut_msg;
                    break;
                }
                if (m == Method::cutqc_unmitigated) {
                    res.distribution = cutqc_unmitigated(*exec);
                } else if (m == Method::cutqc_cm) {
                    res.distribution = cutqc_cm(*exec, cfg.top_k);
                } else {
                    res.distribution = cutqc_mc(*exec, cfg.top_k);
                }
                break;
            }
            }

            if (!res.ok) {
                rep.results.push_back(std::move(res));
                continue;
            }
            if (direct_expectation) {
                res.expectation = *direct_expectation;
            } else {
                res.expectation = expectation(res.distribution, obs);
                res.fidelity =
                    hellinger_fidelity(rep.ideal_distribution, res.distribution);
                res.top_states = top_states_of(res.distribution, c.width, 16);
            }

            if (!is_ghz) {
                res.abe = abe(rep.ideal_expectation, res.expectation);
                if (m == Method::noisy) {
                    if (abe(rep.ideal_expectation, noisy_expectation) != 0.0) {
                        res.abr = 1.0;
                    }
                } else {
                    res.abr = abr(rep.ideal_expectation, res.expectation,
                                  noisy_expectation);
                }
            }
        } catch (const Error &e) {
            res = MethodResult{};
            res.method = m;
            res.ok = false;
            res.error_code = e.code();
            res.error_message = e.what();
        }
        rep.results.push_back(std::move(res));
    }
    return rep;
}

std::string csv_header() {
    return "benchmark,qubits,esp,latency_ns,method,expectation,abe,abr,"
           "fidelity,seed\n";
}

std::string csv_rows(const ExperimentReport &rep) {
    std::string out;
    for (const MethodResult &res : rep.results) {
        out += rep.config.benchmark;
        out += ',';
        out += std::to_string(rep.config.qubits);
        out += ',';
        out += fmt12(rep.esp);
        out += ',';
        out += fmt12(rep.latency_ns);
        out += ',';
        out += method_name(res.method);
        out += ',';
        if (res.ok) out += fmt12(res.expectation);
        out += ',';
        if (res.ok && res.abe) out += fmt12(*res.abe);
        out += ',';
        if (res.ok && res.abr) out += fmt12(*res.abr);
        out += ',';
        if (res.ok && res.fidelity) out += fmt12(*res.fidelity);
        out += ',';
        out += std::to_string(rep.config.seed);
        out += '\n';
    }
    return out;
}

nlohmann::json report_to_json(const ExperimentReport &rep) {
    nlohmann::json j;
    j["config"] = config_to_json(rep.config);
    j["esp"] = rep.esp;
    j["reliability"] = rep.reliability;
    j["latency_ns"] = rep.latency_ns;
    j["ideal_expectation"] = rep.ideal_expectation;
    j["ideal_distribution"] = rep.ideal_distribution;
    nlohmann::json results = nlohmann::json::array();
    for (const MethodResult &res : rep.results) {
        nlohmann::json r;
        r["method"] = method_name(res.method);
        r["ok"] = res.ok;
        if (!res.ok) {
            r["error_code"] = res.error_code;
            r["error_message"] = res.error_message;
        } else {
            r["expectation"] = res.expectation;
            if (res.abe) r["abe"] = *res.abe;
            if (res.abr) r["abr"] = *res.abr;
            if (res.fidelity) r["fidelity"] = *res.fidelity;
            if (!res.distribution.empty()) {
                r["distribution"] = res.distribution;
                nlohmann::json tops = nlohmann::json::array();
                for (const StateWeight &w : res.top_states) {
                    tops.push_back({{"state", w.state},
                                    {"bits", w.bits},
                                    {"probability", w.probability}});
                }
                r["top_states"] = tops;
            }
            if (!res.note.empty()) r["route"] = res.note;
        }
        results.push_back(std::move(r));
    }
    j["results"] = results;
    return j;
}

SweepResult run_sweep(const nlohmann::json &sweep,
                      const std::string &base_dir) {
    if (!sweep.contains("device") || !sweep.contains("rows")) {
        throw ConfigError("sweep config needs \"device\" and \"rows\"");
    }
    std::filesystem::path dev_path(sweep.at("device").get<std::string>());
    if (dev_path.is_relative()) {
        dev_path = std::filesystem::path(base_dir) / dev_path;
    }
    const DeviceModel dev = load_device(dev_path.string());

    nlohmann::json defaults = sweep;
    defaults.erase("device");
    defaults.erase("rows");

    std::vector<ExperimentConfig> configs;
    for (const auto &row : sweep.at("rows")) {
        nlohmann::json merged = defaults;
        merged.update(row);
        ExperimentConfig cfg = config_from_json(merged);
        validate_config(cfg);
        configs.push_back(std::move(cfg));
    }

    std::vector<std::future<ExperimentReport>> futures;
    futures.reserve(configs.size());
    for (const ExperimentConfig &cfg : configs) {
        futures.push_back(std::async(std::launch::async, [&cfg, &dev] {
            return run_experiment(cfg, dev);
        }));
    }

    SweepResult out;
    out.csv = csv_header();
    nlohmann::json reports = nlohmann::json::array();
    for (auto &f : futures) {
        const ExperimentReport rep = f.get();
        out.csv += csv_rows(rep);
        reports.push_back(report_to_json(rep));
    }
    out.json = nlohmann::json{{"device", sweep.at("device")},
                              {"reports", reports}};
    return out;
}

SweepResult run_sweep_file(const std::string &config_path) {
    std::ifstream in(config_path);
    if (!in) {
        throw IoError("cannot open sweep config: " + config_path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError("sweep config is not valid JSON: " +
                         std::string(e.what()));
    }
    return run_sweep(
        j, std::filesystem::path(config_path).parent_path().string());
}

} // namespace qem

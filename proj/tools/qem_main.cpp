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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "qem/benchmarks.hpp"
#include "qem/circuit.hpp"
#include "qem/cutting.hpp"
#include "qem/density.hpp"
#include "qem/device.hpp"
#include "qem/errors.hpp"
#include "qem/esp.hpp"
#include "qem/experiment.hpp"
#include "qem/kernels.hpp"
#include "qem/metrics.hpp"
#include "qem/mitigation.hpp"
#include "qem/qasm.hpp"

namespace {

struct CircuitArgs {
    std::string benchmark = "ghz";
    int qubits = 4;
    int param = -1;
    std::string qasm_path;
};

struct NoiseArgs {
    std::string channels = "depol";
    bool readout = false;
    double scale = 1.0;
};

void add_circuit_options(CLI::App *cmd, CircuitArgs &args) {
    cmd->add_option("--benchmark", args.benchmark,
                    "Benchmark family: ghz, hs, qaoa, qaoa_complete, vqe");
    cmd->add_option("--qubits", args.qubits, "Circuit width");
    cmd->add_option("--param", args.param,
                    "Family parameter (hs steps or vqe layers)");
    cmd->add_option("--qasm", args.qasm_path,
                    "Read the circuit from an OpenQASM 2.0 file instead");
}

void add_noise_options(CLI::App *cmd, NoiseArgs &args) {
    cmd->add_option("--noise", args.channels,
                    "Channels: off, depol, thermal, both")
        ->check(CLI::IsMember({"off", "depol", "thermal", "both"}));
    cmd->add_flag("--readout", args.readout, "Add readout confusion");
    cmd->add_option("--scale", args.scale, "Depolarizing strength multiplier");
}

qem::Circuit build_circuit(const CircuitArgs &args) {
    if (!args.qasm_path.empty()) {
        std::ifstream in(args.qasm_path);
        if (!in) {
            throw qem::IoError("cannot open qasm file: " + args.qasm_path);
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return qem::parse_qasm(ss.str());
    }
    return qem::generate_benchmark(args.benchmark, args.qubits, args.param);
}

qem::NoiseConfig build_noise(const NoiseArgs &args) {
    qem::NoiseConfig nc;
    nc.depolarizing_enabled =
        args.channels == "depol" || args.channels == "both";
    nc.thermal_enabled =
        args.channels == "thermal" || args.channels == "both";
    nc.readout_enabled = args.readout;
    nc.depolarizing_scale = args.scale;
    return nc;
}

qem::DeviceModel load_or_default_device(const std::string &path) {
    if (path.empty()) {
        throw qem::ConfigError("a device file is required (--device)");
    }
    return qem::load_device(path);
}

void write_output(const nlohmann::json &j, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(1) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw qem::IoError("cannot write: " + out_path);
    }
    out << j.dump(1) << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum error mitigation toolkit: reliability- and "
                 "latency-based zero-noise extrapolation, wire cutting, and a "
                 "density-matrix noise simulator"};
    app.require_subcommand(1);

    CircuitArgs circuit_args;
    NoiseArgs noise_args;
    std::string device_path, out_path, observable;
    std::uint64_t seed = 1, shots = 32768;
    bool sampled = false, placement = false;
    int top_k = 10, max_cuts = 2;
    double esp_threshold = 0.10, latency_fraction = 0.7;

    CLI::App *sim = app.add_subcommand(
        "simulate", "Run a circuit on the density-matrix simulator");
    add_circuit_options(sim, circuit_args);
    add_noise_options(sim, noise_args);
    sim->add_option("--device", device_path, "Device JSON file")->required();
    sim->add_option("--seed", seed, "Sampling seed");
    sim->add_option("--shots", shots, "Shots when sampling");
    sim->add_flag("--sampled", sampled, "Sample counts instead of exact");
    sim->add_option("--out", out_path, "Write JSON here instead of stdout");

    CLI::App *mit = app.add_subcommand(
        "mitigate", "Run one experiment row and score its methods");
    add_circuit_options(mit, circuit_args);
    add_noise_options(mit, noise_args);
    mit->add_option("--device", device_path, "Device JSON file")->required();
    std::vector<std::string> method_names = {"noisy", "rzne"};
    mit->add_option("--method", method_names, "Methods to score");
    mit->add_option("--observable", observable, "I/Z string, qubit 0 first");
    mit->add_option("--top-k", top_k, "States transformed per extrapolation");
    mit->add_option("--esp-threshold", esp_threshold, "Cut-routing threshold");
    mit->add_option("--latency-fraction", latency_fraction,
                    "SLZNE latency threshold as a fraction of min t1");
    mit->add_option("--max-cuts", max_cuts, "Cut budget");
    mit->add_option("--seed", seed, "Sampling seed");
    mit->add_option("--shots", shots, "Shots when sampling");
    mit->add_flag("--sampled", sampled, "Sample the noisy distribution");
    mit->add_flag("--placement", placement, "Place widths on device windows");
    mit->add_option("--out", out_path, "Write JSON here instead of stdout");

    CLI::App *cut = app.add_subcommand(
        "cut", "Search for a two-fragment wire-cut partition");
    add_circuit_options(cut, circuit_args);
    cut->add_option("--max-cuts", max_cuts, "Cut budget");
    cut->add_option("--out", out_path, "Write JSON here instead of stdout");

    CLI::App *bench = app.add_subcommand(
        "bench", "Emit a generated benchmark as OpenQASM 2.0");
    add_circuit_options(bench, circuit_args);
    bench->add_option("--out", out_path, "Write QASM here instead of stdout");

    std::string sweep_config, csv_path, json_path;
    CLI::App *sweep = app.add_subcommand(
        "sweep", "Run a JSON-configured sweep of experiment rows");
    sweep->add_option("--config", sweep_config, "Sweep config JSON")
        ->required();
    sweep->add_option("--csv", csv_path, "Write the CSV table here");
    sweep->add_option("--json", json_path, "Write the full JSON report here");

    CLI::App *info = app.add_subcommand(
        "info", "Print toolkit configuration (kernel backend)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            const qem::Circuit c = build_circuit(circuit_args);
            const qem::DeviceModel d = load_or_default_device(device_path);
            const qem::NoiseConfig nc = build_noise(noise_args);
            qem::SimResult r = qem::simulate(c, d, nc);
            std::vector<double> probs = r.probabilities;
            if (sampled) {
                probs = qem::empirical_distribution(
                    qem::sample_counts(probs, shots, seed));
            }
            nlohmann::json j;
            j["latency_ns"] = r.latency_ns;
            j["esp"] = qem::compute_esp(c, d, noise_args.scale);
            j["probabilities"] = probs;
            write_output(j, out_path);
        } else if (mit->parsed()) {
            qem::ExperimentConfig cfg;
            cfg.benchmark = circuit_args.benchmark;
            cfg.qubits = circuit_args.qubits;
            cfg.param = circuit_args.param;
            cfg.noise = build_noise(noise_args);
            cfg.methods.clear();
            for (const std::string &name : method_names) {
                cfg.methods.push_back(qem::method_from_name(name));
            }
            cfg.observable = observable;
            cfg.top_k = top_k;
            cfg.esp_threshold = esp_threshold;
            cfg.latency_fraction = latency_fraction;
            cfg.max_cuts = max_cuts;
            cfg.seed = seed;
            cfg.sampled = sampled;
            cfg.shots = shots;
            cfg.placement = placement;
            const qem::DeviceModel d = load_or_default_device(device_path);
            const qem::ExperimentReport rep = qem::run_experiment(cfg, d);
            write_output(qem::report_to_json(rep), out_path);
        } else if (cut->parsed()) {
            const qem::Circuit c = build_circuit(circuit_args);
            const qem::CutPlan plan = qem::find_cut(c, max_cuts);
            write_output(qem::cut_plan_to_json(plan), out_path);
        } else if (bench->parsed()) {
            const qem::Circuit c = build_circuit(circuit_args);
            const std::string text = qem::emit_qasm(c);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    throw qem::IoError("cannot write: " + out_path);
                }
                out << text;
            }
        } else if (sweep->parsed()) {
            const qem::SweepResult result = qem::run_sweep_file(sweep_config);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                if (!out) {
                    throw qem::IoError("cannot write: " + csv_path);
                }
                out << result.csv;
            }
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) {
                    throw qem::IoError("cannot write: " + json_path);
                }
                out << result.json.dump(1) << "\n";
            }
            if (csv_path.empty() && json_path.empty()) {
                std::cout << result.csv;
            }
        } else if (info->parsed()) {
            nlohmann::json j;
            j["kernel_backend"] = qem::kernel_backend();
            j["avx2_available"] = qem::avx2_available();
            write_output(j, out_path);
        }
    } catch (const qem::Error &e) {
        nlohmann::json err{
            {"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception &e) {
        nlohmann::json err{
            {"error", {{"code", "internal_error"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}

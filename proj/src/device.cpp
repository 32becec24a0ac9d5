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

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "qem/device.hpp"
#include "qem/errors.hpp"

namespace qem {

double DeviceModel::gate_error_for(const Gate &g) const {
    const auto it = gate_error.find(g.name);
    if (it == gate_error.end())
        throw ValidationError("device has no error rate for gate: " + g.name);
    const std::vector<double> &rates = it->second;
    if (rates.size() == 1)
        return rates[0];
    const int q = g.qubits.at(0);
    if (q < 0 || q >= static_cast<int>(rates.size()))
        throw ValidationError("per-qubit error rate index out of range for "
                              "gate: " +
                              g.name);
    return rates[q];
}

double DeviceModel::readout_error_for(int qubit) const {
    if (qubit < 0 || qubit >= static_cast<int>(readout_error.size()))
        throw ValidationError("readout error index out of range");
    return readout_error[qubit];
}

double DeviceModel::duration_for(const Gate &g) const {
    auto it = gate_duration.find(g.name);
    if (it != gate_duration.end())
        return it->second;
    it = gate_duration.find(is_two_qubit_gate(g.name) ? "2q" : "1q");
    if (it != gate_duration.end())
        return it->second;
    throw ValidationError("device has no duration for gate: " + g.name);
}

double DeviceModel::measure_duration() const {
    const auto it = gate_duration.find("measure");
    if (it == gate_duration.end())
        throw ValidationError("device has no measure duration");
    return it->second;
}

double DeviceModel::median_t1() const {
    std::vector<double> v = t1;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 0)
        throw ValidationError("device has no qubits");
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double DeviceModel::min_t1(const std::set<int> &qubits) const {
    if (qubits.empty())
        throw ValidationError("min_t1 over an empty qubit set");
    double m = t1.at(*qubits.begin());
    for (int q : qubits)
        m = std::min(m, t1.at(q));
    return m;
}

DeviceModel DeviceModel::window(int offset, int width) const {
    if (offset < 0 || width < 1 || offset + width > num_qubits())
        throw ValidationError("placement window out of range");
    DeviceModel w;
    w.gate_duration = gate_duration;
    for (const auto &[name, rates] : gate_error) {
        if (rates.size() == 1)
            w.gate_error[name] = rates;
        else
            w.gate_error[name] = std::vector<double>(
                rates.begin() + offset, rates.begin() + offset + width);
    }
    const auto slice = [&](const std::vector<double> &v) {
        return std::vector<double>(v.begin() + offset,
                                   v.begin() + offset + width);
    };
    w.readout_error = slice(readout_error);
    w.t1 = slice(t1);
    w.t2 = slice(t2);
    return w;
}

void validate_device(const DeviceModel &d) {
    const std::size_t n = d.t1.size();
    if (n == 0)
        throw ValidationError("device must have at least one qubit");
    if (d.t2.size() != n || d.readout_error.size() != n)
        throw ValidationError("device per-qubit arrays have mismatched sizes");
    for (std::size_t q = 0; q < n; ++q) {
        if (!(d.t1[q] > 0.0) || !(d.t2[q] > 0.0))
            throw ValidationError("t1 and t2 must be positive");
        if (d.t2[q] > 2.0 * d.t1[q])
            throw ValidationError("t2 must not exceed 2 t1");
        if (d.readout_error[q] < 0.0 || d.readout_error[q] > 1.0)
            throw ValidationError("readout error must lie in [0, 1]");
    }
    for (const auto &[name, rates] : d.gate_error) {
        if (rates.size() != 1 && rates.size() != n)
            throw ValidationError("gate error for " + name +
                                  " must be scalar or one rate per qubit");
        for (double r : rates)
            if (r < 0.0 || r > 1.0)
                throw ValidationError("gate error must lie in [0, 1]");
    }
    for (const auto &[name, dur] : d.gate_duration)
        if (dur < 0.0)
            throw ValidationError("gate duration must be non-negative");
    d.measure_duration(); // throws when absent
}

namespace {

std::vector<double> number_or_array(const nlohmann::json &v, std::size_t n,
                                    const char *what) {
    if (v.is_number())
        return std::vector<double>(n, v.get<double>());
    if (v.is_array()) {
        auto out = v.get<std::vector<double>>();
        if (out.size() != n)
            throw ValidationError(std::string(what) +
                                  " array size does not match qubit count");
        return out;
    }
    throw ValidationError(std::string(what) + " must be a number or array");
}

} // namespace

DeviceModel device_from_json(const nlohmann::json &j) {
    DeviceModel d;
    if (!j.contains("t1"))
        throw ValidationError("device description requires t1");
    std::size_t n = 0;
    if (j["t1"].is_array())
        n = j["t1"].size();
    else if (j.contains("num_qubits"))
        n = j["num_qubits"].get<std::size_t>();
    else
        throw ValidationError(
            "device with scalar t1 requires an explicit num_qubits");
    d.t1 = number_or_array(j.at("t1"), n, "t1");
    d.t2 = number_or_array(j.at("t2"), n, "t2");
    d.readout_error = number_or_array(j.at("readout_error"), n,
                                      "readout_error");
    for (const auto &[name, v] : j.at("gate_error").items()) {
        if (v.is_number())
            d.gate_error[name] = {v.get<double>()};
        else
            d.gate_error[name] = number_or_array(v, n, "gate_error");
    }
    for (const auto &[name, v] : j.at("gate_duration").items())
        d.gate_duration[name] = v.get<double>();
    validate_device(d);
    return d;
}

nlohmann::json device_to_json(const DeviceModel &d) {
    nlohmann::json j;
    j["num_qubits"] = d.num_qubits();
    j["t1"] = d.t1;
    j["t2"] = d.t2;
    j["readout_error"] = d.readout_error;
    nlohmann::json ge;
    for (const auto &[name, rates] : d.gate_error) {
        if (rates.size() == 1)
            ge[name] = rates[0];
        else
            ge[name] = rates;
    }
    j["gate_error"] = ge;
    j["gate_duration"] = d.gate_duration;
    return j;
}

DeviceModel load_device(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open device file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError("device file " + path + ": " + e.what());
    }
    return device_from_json(j);
}

int place(const DeviceModel &d, int width) {
    const int n = d.num_qubits();
    if (width < 1 || width > n)
        throw ValidationError("placement width out of range");
    const double md = d.measure_duration();
    int best_offset = 0;
    double best_score = 0.0;
    for (int o = 0; o + width <= n; ++o) {
        double score = 0.0;
        for (int j = 0; j < width; ++j)
            score += md / d.t1[o + j] + md / d.t2[o + j];
        if (o == 0 || score < best_score - 1e-12) {
            best_score = score;
            best_offset = o;
        }
    }
    return best_offset;
}

double compute_latency(const Circuit &c, const DeviceModel &d) {
    validate_circuit(c);
    if (c.width > d.num_qubits())
        throw ValidationError("circuit wider than device");
    std::vector<double> clock(c.width, 0.0);
    for (const Gate &g : c.gates) {
        double start = 0.0;
        for (int q : g.qubits)
            start = std::max(start, clock[q]);
        const double dur = d.duration_for(g);
        for (int q : g.qubits)
            clock[q] = start + dur;
    }
    double bar = 0.0;
    for (double t : clock)
        bar = std::max(bar, t);
    return bar;
}

NoiseConfig noise_config_from_json(const nlohmann::json &j) {
    NoiseConfig nc;
    nc.depolarizing_enabled = j.value("depolarizing_enabled", true);
    nc.thermal_enabled = j.value("thermal_enabled", true);
    nc.readout_enabled = j.value("readout_enabled", false);
    nc.depolarizing_scale = j.value("depolarizing_scale", 1.0);
    if (nc.depolarizing_scale < 0.0)
        throw ValidationError("depolarizing scale must be non-negative");
    return nc;
}

nlohmann::json noise_config_to_json(const NoiseConfig &nc) {
    return nlohmann::json{{"depolarizing_enabled", nc.depolarizing_enabled},
                          {"thermal_enabled", nc.thermal_enabled},
                          {"readout_enabled", nc.readout_enabled},
                          {"depolarizing_scale", nc.depolarizing_scale}};
}

} // namespace qem

// Copyright 2026 The rbsim Authors
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

#include "rbsim/device.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rbsim {

using nlohmann::json;

void DeviceModel::validate() const {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("device: bad qubit count");
    if (static_cast<int>(t1.size()) != n || static_cast<int>(t2.size()) != n)
        throw std::invalid_argument("device: t1/t2 must have one entry per qubit");
    for (int q = 0; q < n; ++q) {
        if (!(t1[q] > 0) || !(t2[q] > 0))
            throw std::invalid_argument("device: t1/t2 must be positive");
        if (t2[q] > 2 * t1[q] + 1e-15)
            throw std::invalid_argument("device: requires t2 <= 2*t1");
    }
    if (static_cast<int>(zz.size()) != n)
        throw std::invalid_argument("device: zz must be n x n");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(zz[i].size()) != n)
            throw std::invalid_argument("device: zz must be n x n");
        if (zz[i][i] != 0.0)
            throw std::invalid_argument("device: zz diagonal must be zero");
        for (int j = 0; j < n; ++j)
            if (std::abs(zz[i][j] - zz[j][i]) > 1e-9)
                throw std::invalid_argument("device: zz must be symmetric");
    }
    if (!(durations.oneq > 0) || !(durations.cnot > 0))
        throw std::invalid_argument("device: durations must be positive");
    for (const auto& [a, b] : connectivity.edges)
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw std::invalid_argument("device: edge references invalid qubit");
}

double DeviceModel::frame_offset(int q) const {
    if (calibration == Calibration::B) return 0.0;
    double d = 0.0;
    for (int j = 0; j < n; ++j)
        if (j != q) d += zz[q][j] / 2.0;
    return d;
}

void NoiseModel::validate() const {
    auto in01 = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in01(depol_1q) || !in01(depol_2q) || !in01(depol_per_clifford))
        throw std::invalid_argument("noise: probabilities must be in [0,1]");
}

static DeviceModel device_from_json(const json& j) {
    DeviceModel d;
    d.n = j.at("n").get<int>();
    d.t1 = j.at("t1").get<std::vector<double>>();
    d.t2 = j.at("t2").get<std::vector<double>>();
    d.zz = j.at("zz").get<std::vector<std::vector<double>>>();
    if (j.contains("durations")) {
        d.durations.oneq = j["durations"].value("oneq", kDur1q);
        d.durations.cnot = j["durations"].value("cnot", kDurCnot);
    }
    for (const auto& e : j.at("edges"))
        d.connectivity.edges.insert({e.at(0).get<int>(), e.at(1).get<int>()});
    std::string cal = j.value("calibration", "A");
    if (cal != "A" && cal != "B")
        throw std::invalid_argument("device: calibration must be A or B");
    d.calibration = cal == "A" ? Calibration::A : Calibration::B;
    d.zz_sign = j.value("zz_sign", 1.0);
    d.validate();
    return d;
}

DeviceModel DeviceModel::from_json_text(const std::string& text) {
    return device_from_json(json::parse(text));
}

DeviceModel DeviceModel::from_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("device: cannot open " + path);
    json j;
    f >> j;
    return device_from_json(j);
}

std::string DeviceModel::to_json_text() const {
    json j;
    j["n"] = n;
    j["t1"] = t1;
    j["t2"] = t2;
    j["zz"] = zz;
    j["durations"] = {{"oneq", durations.oneq}, {"cnot", durations.cnot}};
    j["edges"] = json::array();
    for (const auto& [a, b] : connectivity.edges) j["edges"].push_back({a, b});
    j["calibration"] = calibration == Calibration::A ? "A" : "B";
    j["zz_sign"] = zz_sign;
    return j.dump(2);
}

DeviceModel DeviceModel::reference_device(Calibration cal) {
    DeviceModel d;
    d.n = 3;
    if (cal == Calibration::A) {
        d.t1 = {29e-6, 50e-6, 39e-6};
        d.t2 = {39e-6, 75e-6, 59e-6};
    } else {
        d.t1 = {42e-6, 47e-6, 35e-6};
        d.t2 = {61e-6, 74e-6, 46e-6};
    }
    d.zz = {{0.0, 20e3, 352e3}, {20e3, 0.0, 114e3}, {352e3, 114e3, 0.0}};
    d.durations = {44.8e-9, 240e-9};
    d.connectivity = ConnectivityGraph::all_to_all(3);
    d.calibration = cal;
    d.validate();
    return d;
}

NoiseModel NoiseModel::from_json_text(const std::string& text) {
    json j = json::parse(text);
    NoiseModel m;
    m.depol_1q = j.value("depol_1q", 0.0);
    m.depol_2q = j.value("depol_2q", 0.0);
    m.enable_damping = j.value("enable_damping", false);
    m.enable_zz = j.value("enable_zz", false);
    m.depol_per_clifford = j.value("depol_per_clifford", 0.0);
    m.validate();
    return m;
}

std::string NoiseModel::to_json_text() const {
    json j;
    j["depol_1q"] = depol_1q;
    j["depol_2q"] = depol_2q;
    j["enable_damping"] = enable_damping;
    j["enable_zz"] = enable_zz;
    j["depol_per_clifford"] = depol_per_clifford;
    return j.dump(2);
}

}  // namespace rbsim

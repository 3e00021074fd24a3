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

#ifndef RBSIM_DEVICE_HPP
#define RBSIM_DEVICE_HPP

#include <string>
#include <vector>

#include "rbsim/circuit.hpp"

namespace rbsim {

/// 1Q calibration policy. A absorbs the average ZZ shift of each pair into
/// the qubit frequencies; B leaves the shifts uncompensated.
enum class Calibration { A, B };

struct DeviceModel {
    int n = 3;
    std::vector<double> t1;             // seconds, per qubit
    std::vector<double> t2;             // seconds, per qubit
    std::vector<std::vector<double>> zz;  // Hz, symmetric, zero diagonal
    GateDurations durations;
    ConnectivityGraph connectivity;
    Calibration calibration = Calibration::A;
    double zz_sign = 1.0;  // sign convention of the quoted shifts

    void validate() const;

    /// Frequency offset of qubit q under the calibration policy (Hz).
    double frame_offset(int q) const;

    static DeviceModel from_json_file(const std::string& path);
    static DeviceModel from_json_text(const std::string& text);
    std::string to_json_text() const;

    /// Bundled three-qubit reference device, calibration A or B coherences.
    static DeviceModel reference_device(Calibration cal);
};

struct NoiseModel {
    double depol_1q = 0.0;          // per 1Q pulse (identity pulses included)
    double depol_2q = 0.0;          // per CNOT
    bool enable_damping = false;
    bool enable_zz = false;
    double depol_per_clifford = 0.0;  // global, applied at Clifford boundaries

    void validate() const;
    bool noiseless() const {
        return depol_1q == 0 && depol_2q == 0 && !enable_damping && !enable_zz &&
               depol_per_clifford == 0;
    }

    static NoiseModel from_json_text(const std::string& text);
    std::string to_json_text() const;
};

}  // namespace rbsim

#endif  // RBSIM_DEVICE_HPP

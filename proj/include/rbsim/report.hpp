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

#ifndef RBSIM_REPORT_HPP
#define RBSIM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "rbsim/rb.hpp"

namespace rbsim {

/// One executed experiment: the spec that produced it plus the result.
struct ExperimentRecord {
    std::string label;  // partition label, e.g. "{[0,1],[2]}"
    RBSpec spec;
    RBResult result;
};

/// Raw per-seed curve data. Stable column order:
/// partition,subset,m,seed,survival
std::string curves_csv(const std::vector<ExperimentRecord>& records);

/// Plot data for one subset of one experiment: m,mean,stderr rows.
std::string plot_csv(const ExperimentRecord& record, int subset_index);

/// Versioned JSON summary ("schema": 1) with fits, EPCs and raw curve
/// statistics for every subset of every experiment.
std::string summary_json_text(const std::vector<ExperimentRecord>& records,
                              const DeviceModel& device, const NoiseModel& noise,
                              uint64_t master_seed);

struct SummaryFit {
    std::string label;
    std::vector<int> qubits;
    std::string observable;  // "joint" or "marginal"
    double a = 0, alpha = 1, b = 0;
    double a_err = 0, alpha_err = 0, b_err = 0;
    double epc = 0, epc_err = 0;
    bool degenerate = false;
};

struct Summary {
    uint64_t master_seed = 0;
    std::vector<SummaryFit> fits;
};
Summary parse_summary(const std::string& json_text);

/// Reconstruct per-subset decay curves from the raw CSV (used by the
/// `report` command so every table cell is recomputable from disk).
struct CsvCurve {
    std::string label;
    std::vector<int> qubits;
    std::vector<DecayPoint> points;
};
std::vector<CsvCurve> parse_curves_csv(const std::string& csv_text);

/// Monte-Carlo gate statistics of the compiler for n-qubit Cliffords.
struct SynthStats {
    int n = 0;
    int samples = 0;
    double avg_cnot = 0, se_cnot = 0;
    double avg_1q = 0, se_1q = 0;                      // pulses + identity pulses
    double avg_1q_with_idles = 0, se_1q_with_idles = 0;
    double avg_vz = 0;
    double avg_duration = 0;  // seconds, scheduled
    double verify_rate = 0;   // fraction passing tableau verification
};
SynthStats synth_stats(int n, const ConnectivityGraph& conn, int samples,
                       uint64_t seed, const GateDurations& dur = {});
std::string synth_stats_text(const SynthStats& s);

/// Two-qubit connectivity (local indices 0,1) mirroring the device's native
/// CNOT direction(s) between physical qubits a and b.  Use this when the
/// compiler statistics must match circuits that were routed for the device.
ConnectivityGraph pair_connectivity(const DeviceModel& device, int a, int b);

/// Per-experiment summary table: measured EPC and the derived EPG.
std::string table1_text(const Summary& summary);

/// Everything the prediction pipeline derives from a summary.
struct PredictionReport {
    double alpha_1q = 1;     // per 1Q primitive, averaged over qubits
    double alpha_2q = 1;     // per CNOT
    double n1 = 0, n2 = 0;   // compiler averages per 3Q Clifford
    Prediction prediction;
    double coherence_epc = 0;
    std::optional<double> measured_3q_epc, measured_3q_err;
    std::string text() const;
};

/// Build the Eq.-style 3Q prediction from the 1Q/2Q fits in a summary.
/// Throws std::invalid_argument when the needed 1Q or 2Q fits are missing.
PredictionReport build_prediction(const Summary& summary,
                                  const SynthStats& stats2q,
                                  const SynthStats& stats3q,
                                  const DeviceModel& device);

}  // namespace rbsim

#endif  // RBSIM_REPORT_HPP

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

#ifndef RBSIM_RB_HPP
#define RBSIM_RB_HPP

#include <optional>
#include <string>
#include <vector>

#include "rbsim/densmat.hpp"
#include "rbsim/fit.hpp"
#include "rbsim/synth.hpp"

namespace rbsim {

/// Disjoint qubit subsets benchmarked simultaneously, e.g. {[0,1],[2]}.
struct RBPartition {
    std::vector<std::vector<int>> subsets;

    void validate(int device_n) const;
    std::string label() const;  // "{[0,1],[2]}"
    bool has_subset_of_size(int k) const;
    static RBPartition parse(const std::string& label);
};

enum class ObservableMode { Joint, Marginal };

struct RBSpec {
    RBPartition partition;
    std::vector<int> lengths;  // strictly increasing, >= 1
    int seeds = 30;
    int ratio_1q_per_2q = 9;
    ObservableMode observable = ObservableMode::Joint;
    bool bootstrap = false;       // alpha_err from seed resampling instead of
    int bootstrap_resamples = 200;  // the local quadratic model

    void validate(int device_n) const;
    /// Default sequence lengths by subset size (largest subset governs).
    static std::vector<int> default_lengths(int n);
};

struct SubsetCurve {
    std::vector<int> lengths;
    std::vector<std::vector<double>> survival;  // [length][seed]
    std::vector<double> mean;
    std::vector<double> stderr_;
};

struct SubsetResult {
    std::vector<int> qubits;
    DecayFit fit;
    double epc = 0, epc_err = 0;
    SubsetCurve curve;
};

struct RBResult {
    std::vector<SubsetResult> subsets;
    uint64_t master_seed = 0;
};

/// Fit failure with the raw curve attached for post-mortem.
struct RBFitError : FitError {
    SubsetCurve curve;
    RBFitError(const std::string& msg, SubsetCurve c)
        : FitError(msg), curve(std::move(c)) {}
};

/// One simultaneous-RB round for every subset at base length m: the random
/// Cliffords plus the appended inverse, as tableaux. 1Q subsets sharing a
/// partition with a 2Q subset get ratio_1q_per_2q Cliffords per base unit.
struct SubsetSequence {
    std::vector<int> qubits;
    std::vector<CliffordTableau> cliffords;  // inverse included as last element
};
std::vector<SubsetSequence> generate_sequences(const RBSpec& spec, int m,
                                               uint64_t seed);

/// Full pipeline: sample, compile, route, schedule, simulate, measure, fit.
RBResult run_experiment(const RBSpec& spec, const DeviceModel& device,
                        const NoiseModel& noise, uint64_t master_seed,
                        int threads = 1);

/// Single-curve survival values for one subset sequence set (used by
/// run_experiment and the tests).
std::vector<double> simulate_rb_round(const std::vector<SubsetSequence>& seqs,
                                      const DeviceModel& device,
                                      const NoiseModel& noise,
                                      ObservableMode observable);

// ----- conversions -----

double epc_from_alpha(int n, double alpha);
double alpha_from_epc(int n, double epc);

/// Depolarizing small-error approximation EPG = EPC / gates_per_clifford.
double epg_from_epc(double epc, double gates_per_clifford);
/// Exact-compounding variant: alpha_gate = alpha_clifford^{1/gates}.
double epg_from_epc_compounded(int n, double epc, double gates_per_clifford);

/// Solve for the CNOT depolarizing parameter in the Pauli-sector model
///   alpha_2Q = alpha_c^{n_cnot} (3 A + 3 B + 9 A B)/15,
///   A = alpha1_a^{n1_a}, B = alpha1_b^{n1_b},
/// then convert to a CNOT EPG via the n=2 EPC relation.
double extract_2q_epg(double epc_2q_clifford, double epg_1q_a, double epg_1q_b,
                      double n1_a, double n1_b, double n_cnot = 1.5);

// ----- three-qubit prediction -----

struct PredictionInputs {
    double alpha_1q = 1.0;  // per-primitive 1Q depolarizing parameter
    double alpha_2q = 1.0;  // per-CNOT depolarizing parameter
    double n1 = 0.0;        // average 1Q gates (idle-as-1Q included) per 3Q Clifford
    double n2 = 0.0;        // average CNOTs per 3Q Clifford
};

struct Prediction {
    double alpha = 1.0;
    double epc = 0.0;
};

/// Homogeneous-rate sector average:
/// alpha_3Q = (a b^2 / 7)(1 + 3 a b + 3 a^2 b), a = alpha1^{N1/3}, b = alpha2^{N2/3}.
Prediction predict_alpha_3q(const PredictionInputs& inp);

/// Heterogeneous-rate generalization: per-qubit 1Q parameters and per-pair
/// CNOT parameters averaged over the 63 nontrivial Pauli support sectors.
/// Pairs ordered (0,1), (0,2), (1,2).
Prediction predict_alpha_3q_general(const std::array<double, 3>& alpha1,
                                    const std::array<double, 3>& n1,
                                    const std::array<double, 3>& alpha2,
                                    const std::array<double, 3>& n2);

/// Twirled EPC of the pure T1/T2 idle channel of the given duration.
double coherence_limit_3q_epc(const DeviceModel& device,
                              double avg_clifford_duration);

// ----- prediction vs measurement -----

struct PredictionComparison {
    std::string label;
    double measured_epc = 0, measured_err = 0;
    double predicted_epc = 0, predicted_err = 0;
    double ratio = 0;  // predicted / measured
};
PredictionComparison compare_prediction(const std::string& label,
                                        double measured_epc, double measured_err,
                                        double predicted_epc, double predicted_err);

/// The standard eight-combination suite on three qubits.
std::vector<RBPartition> standard_partitions();

/// Derived per-(purpose,index) seed, stable across runs and thread counts.
uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index);

}  // namespace rbsim

#endif  // RBSIM_RB_HPP

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

#ifndef RBSIM_DENSMAT_HPP
#define RBSIM_DENSMAT_HPP

#include <Eigen/Dense>
#include <complex>

#include "rbsim/device.hpp"

namespace rbsim {

using Cmat = Eigen::MatrixXcd;

/// 2^n x 2^n Hermitian trace-1 state. Qubit 0 is the most significant bit
/// of the basis-state index.
struct DensityMatrix {
    int n = 1;
    Cmat m;

    static DensityMatrix zero_state(int n);
    static DensityMatrix maximally_mixed(int n);

    int dim() const { return 1 << n; }
    double purity() const { return (m * m).trace().real(); }

    /// Throws if trace, Hermiticity or positivity drift past the invariants
    /// (|tr-1| < 1e-10, Hermitian to 1e-10, min eigenvalue >= -1e-9).
    void check_valid() const;
};

/// Bit of qubit q in basis-state index b (qubit 0 = MSB).
inline int qubit_bit(int b, int q, int n) { return (b >> (n - 1 - q)) & 1; }

/// Dense matrix of a signed Pauli string.
Cmat pauli_matrix(const PauliString& p);

/// Full-space unitary of a primitive gate under P_theta = exp(-i theta P/2).
Cmat gate_unitary(const PrimitiveGate& g, int n);

void apply_unitary(DensityMatrix& rho, const Cmat& u);
void apply_gate(DensityMatrix& rho, const PrimitiveGate& g);

/// Depolarize the qubits in `subset_mask` with probability p:
/// rho -> (1-p) rho + p * (trace out subset, replace by maximally mixed).
void apply_depolarizing(DensityMatrix& rho, uint32_t subset_mask, double p);

/// Amplitude damping with gamma = 1 - exp(-t/T1) composed with the pure
/// dephasing that brings total coherence decay to exp(-t/T2).
void apply_damping(DensityMatrix& rho, int qubit, double t, double t1, double t2);

/// Always-on ZZ frame: diagonal unitary
/// exp(-i 2 pi t s [sum_{i<j} zz_ij n_i n_j - sum_i delta_i n_i]),
/// delta from the device calibration policy.
void apply_zz_frame(DensityMatrix& rho, double t, const DeviceModel& device);

/// P(all subset qubits read 0).
double population_all_zero(const DensityMatrix& rho, uint32_t subset_mask);
/// Marginal P(qubit reads 0).
double population_zero_marginal(const DensityMatrix& rho, int qubit);

// ----- timeline simulation -----

struct TimelineEvent {
    double time = 0.0;
    bool is_gate = true;
    PrimitiveGate gate;         // when is_gate
    uint32_t depol_mask = 0;    // when !is_gate: subset depolarizing marker
    double depol_p = 0.0;
};

/// Gate events of a scheduled circuit, each at its midpoint, with the
/// per-gate depolarizing strength attached from the noise model.
std::vector<TimelineEvent> circuit_events(const PrimitiveCircuit& circ,
                                          const NoiseModel& noise,
                                          double t_offset = 0.0);

/// Evolve rho through time-sorted events over [0, total_time]: symmetric
/// half-step ZZ around each segment, per-qubit damping across segments,
/// instantaneous gates plus their depolarizing at event times.
DensityMatrix simulate_timeline(DensityMatrix rho, std::vector<TimelineEvent> events,
                                double total_time, const DeviceModel& device,
                                const NoiseModel& noise);

/// Convenience wrapper: schedule-consistent simulation of one circuit.
DensityMatrix simulate_circuit(const DensityMatrix& rho0,
                               const PrimitiveCircuit& circ,
                               const DeviceModel& device, const NoiseModel& noise);

// ----- closed-form coherence limits -----

/// 1 qubit: 1 - [1/2 + e^{-t/T2}/3 + e^{-t/T1}/6].
/// 2 qubits: 1 - (4 F_proc + 1)/5, F_proc = prod_q (1 + e^{-t/T1q} + 2 e^{-t/T2q})/4.
double coherence_limit_epg(double duration, const std::vector<int>& qubits,
                           const DeviceModel& device);

}  // namespace rbsim

#endif  // RBSIM_DENSMAT_HPP

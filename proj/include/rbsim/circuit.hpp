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

#ifndef RBSIM_CIRCUIT_HPP
#define RBSIM_CIRCUIT_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rbsim/tableau.hpp"

namespace rbsim {

enum class GateKind {
    Idle,      // scheduler filler, no pulse
    Identity,  // deliberate identity pulse of one 1Q-gate duration
    Xp90,
    Xm90,
    Yp90,
    Ym90,
    VZ,    // software Z rotation, zero duration
    Cnot,  // qubits = (control, target)
};

/// Default device durations (seconds).
inline constexpr double kDur1q = 44.8e-9;
inline constexpr double kDurCnot = 240e-9;

struct GateDurations {
    double oneq = kDur1q;
    double cnot = kDurCnot;
};

struct PrimitiveGate {
    GateKind kind = GateKind::Identity;
    int q0 = 0;
    int q1 = -1;           // second qubit (CNOT target), -1 otherwise
    double angle = 0.0;    // VZ angle in radians
    double duration = 0.0; // filled by scheduling (or construction)

    bool is_two_qubit() const { return kind == GateKind::Cnot; }
    bool is_pulse() const {
        return kind == GateKind::Xp90 || kind == GateKind::Xm90 ||
               kind == GateKind::Yp90 || kind == GateKind::Ym90;
    }
    static PrimitiveGate idle(int q, double dur) {
        return {GateKind::Idle, q, -1, 0.0, dur};
    }
    static PrimitiveGate vz(int q, double angle) {
        return {GateKind::VZ, q, -1, angle, 0.0};
    }
    static PrimitiveGate cnot(int control, int target) {
        return {GateKind::Cnot, control, target, 0.0, 0.0};
    }
    static PrimitiveGate oneq(GateKind k, int q) { return {k, q, -1, 0.0, 0.0}; }
};

struct Slice {
    std::vector<PrimitiveGate> gates;
    double start = 0.0;
    double duration = 0.0;
};

/// Timed primitive-gate circuit. `gates` is the program order; `slices`
/// is filled by schedule() and carries explicit idles.
struct PrimitiveCircuit {
    int n = 1;
    std::vector<PrimitiveGate> gates;
    std::vector<Slice> slices;
    bool scheduled = false;
    double total_duration = 0.0;

    void push(const PrimitiveGate& g) { gates.push_back(g); }
    void append(const PrimitiveCircuit& other);
};

/// Directed CNOT edges.
struct ConnectivityGraph {
    std::set<std::pair<int, int>> edges;

    static ConnectivityGraph all_to_all(int n);
    /// All-to-all for n qubits minus the undirected edge {a, b}.
    static ConnectivityGraph omit(int n, int a, int b);

    bool has_directed(int c, int t) const { return edges.count({c, t}) != 0; }
    bool has_undirected(int a, int b) const {
        return has_directed(a, b) || has_directed(b, a);
    }
    bool connected(int n) const;
};

struct GateCounts {
    double n_cnot = 0;
    double n_1q = 0;          // X/Y pulses plus deliberate identity pulses
    double n_idle_as_1q = 0;  // total idle time / 1Q duration (real-valued)
    double n_vz = 0;

    double n_1q_with_idles() const { return n_1q + n_idle_as_1q; }
};

/// Conjugation tableau of a single primitive gate (VZ must be a multiple
/// of pi/2; anything else is non-Clifford and rejected).
CliffordTableau gate_tableau(const PrimitiveGate& g, int n);

/// Tableau induced by the whole circuit (gate order = program order).
CliffordTableau circuit_tableau(const PrimitiveCircuit& circ);

/// As-soon-as-possible slicing with explicit idles; slice duration is the
/// longest gate in the slice and total_duration is the sum over slices.
PrimitiveCircuit schedule(const PrimitiveCircuit& circ, const GateDurations& dur);

/// Exact gate counts of a scheduled circuit.
GateCounts count_gates(const PrimitiveCircuit& circ, const GateDurations& dur);

/// Line-oriented text form, one slice per line: gate(qubits)@duration.
std::string serialize_circuit(const PrimitiveCircuit& circ);

}  // namespace rbsim

#endif  // RBSIM_CIRCUIT_HPP

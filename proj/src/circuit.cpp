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

#include "rbsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rbsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 1Q gate conjugation images under P_theta = exp(-i theta P / 2):
//   X+90: X -> X,  Z -> -Y   (Y -> Z)
//   X-90: X -> X,  Z -> Y    (Y -> -Z)
//   Y+90: X -> -Z, Z -> X    (Y -> Y)
//   Y-90: X -> Z,  Z -> -X   (Y -> Y)
//   Z+90: X -> Y,  Z -> Z    (Y -> -X)
CliffordTableau tableau_1q(int x_letter, bool x_neg, int z_letter, bool z_neg) {
    CliffordTableau c;
    c.n = 1;
    c.rows[0] = PauliString::single(1, 0, x_letter);
    if (x_neg) c.rows[0].negate();
    c.rows[1] = PauliString::single(1, 0, z_letter);
    if (z_neg) c.rows[1].negate();
    return c;
}

CliffordTableau vz_tableau_1q(int quarter_turns) {
    // Z rotation by quarter_turns * pi/2.
    CliffordTableau c = identity_tableau(1);
    CliffordTableau s = tableau_1q(2, false, 3, false);  // X->Y, Z->Z
    for (int k = 0; k < ((quarter_turns % 4) + 4) % 4; ++k) c = compose(c, s);
    return c;
}

}  // namespace

CliffordTableau gate_tableau(const PrimitiveGate& g, int n) {
    switch (g.kind) {
        case GateKind::Idle:
        case GateKind::Identity:
            return identity_tableau(n);
        case GateKind::Xp90:
            return embed_1q(tableau_1q(1, false, 2, true), g.q0, n);
        case GateKind::Xm90:
            return embed_1q(tableau_1q(1, false, 2, false), g.q0, n);
        case GateKind::Yp90:
            return embed_1q(tableau_1q(3, true, 1, false), g.q0, n);
        case GateKind::Ym90:
            return embed_1q(tableau_1q(3, false, 1, true), g.q0, n);
        case GateKind::VZ: {
            double turns = g.angle / (kPi / 2);
            double rounded = std::round(turns);
            if (std::abs(turns - rounded) > 1e-9)
                throw std::invalid_argument("gate_tableau: non-Clifford VZ angle");
            return embed_1q(vz_tableau_1q(static_cast<int>(rounded)), g.q0, n);
        }
        case GateKind::Cnot: {
            CliffordTableau c = identity_tableau(n);
            int ctl = g.q0, tgt = g.q1;
            if (ctl < 0 || tgt < 0 || ctl >= n || tgt >= n || ctl == tgt)
                throw std::invalid_argument("gate_tableau: bad CNOT qubits");
            // X_c -> X_c X_t, Z_t -> Z_c Z_t.
            c.rows[ctl] = PauliString::from_bits(
                n, (1u << ctl) | (1u << tgt), 0, 0);
            c.rows[n + tgt] = PauliString::from_bits(
                n, 0, (1u << ctl) | (1u << tgt), 0);
            return c;
        }
    }
    throw std::logic_error("gate_tableau: unreachable");
}

CliffordTableau circuit_tableau(const PrimitiveCircuit& circ) {
    CliffordTableau c = identity_tableau(circ.n);
    for (const auto& g : circ.gates) c = compose(c, gate_tableau(g, circ.n));
    return c;
}

void PrimitiveCircuit::append(const PrimitiveCircuit& other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    scheduled = false;
    slices.clear();
    total_duration = 0.0;
}

ConnectivityGraph ConnectivityGraph::all_to_all(int n) {
    ConnectivityGraph g;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.edges.insert({i, j});
    return g;
}

ConnectivityGraph ConnectivityGraph::omit(int n, int a, int b) {
    ConnectivityGraph g = all_to_all(n);
    g.edges.erase({a, b});
    g.edges.erase({b, a});
    return g;
}

bool ConnectivityGraph::connected(int n) const {
    if (n <= 1) return true;
    std::vector<int> comp(n, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges) {
            int other = -1;
            if (a == v) other = b;
            if (b == v) other = a;
            if (other >= 0 && comp[other] < 0) {
                comp[other] = 0;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

PrimitiveCircuit schedule(const PrimitiveCircuit& circ, const GateDurations& dur) {
    PrimitiveCircuit out;
    out.n = circ.n;
    out.gates = circ.gates;

    auto gate_duration = [&](const PrimitiveGate& g) {
        switch (g.kind) {
            case GateKind::Cnot:
                return dur.cnot;
            case GateKind::VZ:
                return 0.0;
            case GateKind::Idle:
                return g.duration;
            default:
                return dur.oneq;
        }
    };

    // ASAP in slice units: a gate lands one slice past the latest slice
    // touching any of its qubits.
    std::vector<int> last_slice(circ.n, -1);
    std::vector<Slice> slices;
    for (auto g : circ.gates) {
        g.duration = gate_duration(g);
        int idx = last_slice[g.q0];
        if (g.is_two_qubit()) idx = std::max(idx, last_slice[g.q1]);
        idx += 1;
        if (idx >= static_cast<int>(slices.size())) slices.resize(idx + 1);
        slices[idx].gates.push_back(g);
        last_slice[g.q0] = idx;
        if (g.is_two_qubit()) last_slice[g.q1] = idx;
    }

    double t = 0.0;
    for (auto& s : slices) {
        s.start = t;
        s.duration = 0.0;
        for (const auto& g : s.gates) s.duration = std::max(s.duration, g.duration);
        // Cover every qubit with either its gate plus trailing idle, or a
        // full-slice idle.
        std::vector<double> busy(circ.n, 0.0);
        std::vector<bool> touched(circ.n, false);
        for (const auto& g : s.gates) {
            busy[g.q0] = std::max(busy[g.q0], g.duration);
            touched[g.q0] = true;
            if (g.is_two_qubit()) {
                busy[g.q1] = std::max(busy[g.q1], g.duration);
                touched[g.q1] = true;
            }
        }
        for (int q = 0; q < circ.n; ++q) {
            double gap = s.duration - busy[q];
            if (gap > 0.0 || (!touched[q] && s.duration > 0.0))
                s.gates.push_back(PrimitiveGate::idle(q, gap));
        }
        t += s.duration;
    }
    out.slices = std::move(slices);
    out.total_duration = t;
    out.scheduled = true;
    // program order of `gates` keeps unfilled durations; refresh them
    for (auto& g : out.gates) g.duration = gate_duration(g);
    return out;
}

GateCounts count_gates(const PrimitiveCircuit& circ, const GateDurations& dur) {
    if (!circ.scheduled)
        throw std::invalid_argument("count_gates: circuit must be scheduled");
    GateCounts c;
    for (const auto& s : circ.slices) {
        for (const auto& g : s.gates) {
            switch (g.kind) {
                case GateKind::Cnot:
                    c.n_cnot += 1;
                    break;
                case GateKind::VZ:
                    c.n_vz += 1;
                    break;
                case GateKind::Idle:
                    c.n_idle_as_1q += g.duration / dur.oneq;
                    break;
                default:
                    c.n_1q += 1;
                    break;
            }
        }
    }
    return c;
}

std::string serialize_circuit(const PrimitiveCircuit& circ) {
    if (!circ.scheduled)
        throw std::invalid_argument("serialize_circuit: circuit must be scheduled");
    std::ostringstream os;
    os.precision(10);
    for (const auto& s : circ.slices) {
        bool first = true;
        for (const auto& g : s.gates) {
            if (!first) os << ' ';
            first = false;
            switch (g.kind) {
                case GateKind::Idle:
                    os << "idle(" << g.q0 << ")@" << g.duration;
                    break;
                case GateKind::Identity:
                    os << "i(" << g.q0 << ")@" << g.duration;
                    break;
                case GateKind::Xp90:
                    os << "x90(" << g.q0 << ")@" << g.duration;
                    break;
                case GateKind::Xm90:
                    os << "xm90(" << g.q0 << ")@" << g.duration;
                    break;
                case GateKind::Yp90:
                    os << "y90(" << g.q0 << ")@" << g.duration;
                    break;
                case GateKind::Ym90:
                    os << "ym90(" << g.q0 << ")@" << g.duration;
                    break;
                case GateKind::VZ:
                    os << "vz[" << g.angle << "](" << g.q0 << ")@0";
                    break;
                case GateKind::Cnot:
                    os << "cnot(" << g.q0 << ',' << g.q1 << ")@" << g.duration;
                    break;
            }
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace rbsim

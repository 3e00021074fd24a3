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

#include "rbsim/densmat.hpp"

#include <algorithm>
#include <cmath>

namespace rbsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
const std::complex<double> kI{0.0, 1.0};

Eigen::Matrix2cd pauli2(int letter) {
    Eigen::Matrix2cd m;
    switch (letter) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -kI, kI, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

/// Embed a 1-qubit operator on `q` into the full space (qubit 0 = MSB).
Cmat embed_op(const Eigen::Matrix2cd& op, int q, int n) {
    Cmat full = Cmat::Identity(1, 1);
    // build kron(f_0, kron(f_1, ...)) so qubit 0 lands on the MSB
    for (int k = n - 1; k >= 0; --k) {
        const Eigen::Matrix2cd& f =
            (k == q) ? op : Eigen::Matrix2cd(Eigen::Matrix2cd::Identity());
        Cmat next(full.rows() * 2, full.cols() * 2);
        next.setZero();
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                next.block(a * full.rows(), b * full.cols(), full.rows(),
                           full.cols()) = f(a, b) * full;
        full = std::move(next);
    }
    return full;
}

Eigen::Matrix2cd rot(int letter, double theta) {
    return std::cos(theta / 2) * Eigen::Matrix2cd::Identity() -
           kI * std::sin(theta / 2) * pauli2(letter);
}

void apply_kraus_1q(DensityMatrix& rho, int q,
                    const std::vector<Eigen::Matrix2cd>& kraus) {
    Cmat out = Cmat::Zero(rho.dim(), rho.dim());
    for (const auto& k : kraus) {
        Cmat kf = embed_op(k, q, rho.n);
        out += kf * rho.m * kf.adjoint();
    }
    rho.m = std::move(out);
}

}  // namespace

DensityMatrix DensityMatrix::zero_state(int n) {
    DensityMatrix r;
    r.n = n;
    r.m = Cmat::Zero(1 << n, 1 << n);
    r.m(0, 0) = 1.0;
    return r;
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    DensityMatrix r;
    r.n = n;
    r.m = Cmat::Identity(1 << n, 1 << n) / static_cast<double>(1 << n);
    return r;
}

void DensityMatrix::check_valid() const {
    if (std::abs(m.trace().real() - 1.0) > 1e-10 || std::abs(m.trace().imag()) > 1e-10)
        throw std::runtime_error("density matrix: trace drifted from 1");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::runtime_error("density matrix: not Hermitian");
    Eigen::SelfAdjointEigenSolver<Cmat> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw std::runtime_error("density matrix: negative eigenvalue");
}

Cmat pauli_matrix(const PauliString& p) {
    Cmat full = Cmat::Identity(1, 1);
    for (int q = p.n - 1; q >= 0; --q) {
        const Eigen::Matrix2cd f = pauli2(p.letter(q));
        Cmat next(full.rows() * 2, full.cols() * 2);
        next.setZero();
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                next.block(a * full.rows(), b * full.cols(), full.rows(),
                           full.cols()) = f(a, b) * full;
        full = std::move(next);
    }
    static const std::complex<double> signs[4] = {1.0, kI, -1.0, -kI};
    return signs[p.sign_exp()] * full;
}

Cmat gate_unitary(const PrimitiveGate& g, int n) {
    if (g.q0 < 0 || g.q0 >= n || (g.is_two_qubit() && (g.q1 < 0 || g.q1 >= n)))
        throw std::invalid_argument("gate_unitary: invalid qubit index");
    switch (g.kind) {
        case GateKind::Idle:
        case GateKind::Identity:
            return Cmat::Identity(1 << n, 1 << n);
        case GateKind::Xp90:
            return embed_op(rot(1, kPi / 2), g.q0, n);
        case GateKind::Xm90:
            return embed_op(rot(1, -kPi / 2), g.q0, n);
        case GateKind::Yp90:
            return embed_op(rot(2, kPi / 2), g.q0, n);
        case GateKind::Ym90:
            return embed_op(rot(2, -kPi / 2), g.q0, n);
        case GateKind::VZ:
            return embed_op(rot(3, g.angle), g.q0, n);
        case GateKind::Cnot: {
            int d = 1 << n;
            Cmat u = Cmat::Zero(d, d);
            for (int b = 0; b < d; ++b) {
                int out = b;
                if (qubit_bit(b, g.q0, n))
                    out = b ^ (1 << (n - 1 - g.q1));
                u(out, b) = 1.0;
            }
            return u;
        }
    }
    throw std::logic_error("gate_unitary: unreachable");
}

void apply_unitary(DensityMatrix& rho, const Cmat& u) {
    rho.m = u * rho.m * u.adjoint();
}

void apply_gate(DensityMatrix& rho, const PrimitiveGate& g) {
    apply_unitary(rho, gate_unitary(g, rho.n));
}

void apply_depolarizing(DensityMatrix& rho, uint32_t subset_mask, double p) {
    if (subset_mask == 0) throw std::invalid_argument("apply_depolarizing: empty subset");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("apply_depolarizing: bad p");
    if (p == 0.0) return;
    std::vector<int> qs;
    for (int q = 0; q < rho.n; ++q)
        if ((subset_mask >> q) & 1) qs.push_back(q);
    const int k = static_cast<int>(qs.size());
    const int count = 1 << (2 * k);
    Cmat acc = Cmat::Zero(rho.dim(), rho.dim());
    for (int code = 0; code < count; ++code) {
        PauliString p_str(rho.n);
        int c = code;
        for (int q : qs) {
            p_str.set_letter(q, c & 3);
            c >>= 2;
        }
        p_str.phase_exp = static_cast<uint8_t>(p_str.num_y() & 3);
        Cmat pm = pauli_matrix(p_str);
        acc += pm * rho.m * pm.adjoint();
    }
    rho.m = (1.0 - p) * rho.m + (p / count) * acc;
}

void apply_damping(DensityMatrix& rho, int qubit, double t, double t1, double t2) {
    if (t < 0) throw std::invalid_argument("apply_damping: negative time");
    if (t2 > 2 * t1 + 1e-15) throw std::invalid_argument("apply_damping: t2 > 2*t1");
    if (t == 0) return;
    const double g1 = 1.0 - std::exp(-t / t1);
    std::vector<Eigen::Matrix2cd> kraus(2, Eigen::Matrix2cd::Zero());
    kraus[0] << 1, 0, 0, std::sqrt(1.0 - g1);
    kraus[1] << 0, std::sqrt(g1), 0, 0;
    apply_kraus_1q(rho, qubit, kraus);
    // residual pure dephasing so coherences decay as exp(-t/T2)
    const double lambda = std::exp(-t * (1.0 / t2 - 1.0 / (2.0 * t1)));
    if (lambda < 1.0) {
        std::vector<Eigen::Matrix2cd> deph(2);
        deph[0] = std::sqrt((1.0 + lambda) / 2.0) * Eigen::Matrix2cd::Identity();
        deph[1] = std::sqrt((1.0 - lambda) / 2.0) * pauli2(3);
        apply_kraus_1q(rho, qubit, deph);
    }
}

void apply_zz_frame(DensityMatrix& rho, double t, const DeviceModel& device) {
    if (t < 0) throw std::invalid_argument("apply_zz_frame: negative time");
    if (t == 0) return;
    const int n = rho.n;
    const int d = 1 << n;
    std::vector<double> phase(d, 0.0);
    for (int b = 0; b < d; ++b) {
        double f = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!qubit_bit(b, i, n)) continue;
            f -= device.frame_offset(i);
            for (int j = i + 1; j < n; ++j)
                if (qubit_bit(b, j, n)) f += device.zz[i][j];
        }
        phase[b] = -2.0 * kPi * t * device.zz_sign * f;
    }
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            rho.m(r, c) *= std::exp(kI * (phase[r] - phase[c]));
}

double population_all_zero(const DensityMatrix& rho, uint32_t subset_mask) {
    if (subset_mask == 0)
        throw std::invalid_argument("population_all_zero: empty subset");
    double p = 0.0;
    for (int b = 0; b < rho.dim(); ++b) {
        bool zero = true;
        for (int q = 0; q < rho.n && zero; ++q)
            if (((subset_mask >> q) & 1) && qubit_bit(b, q, rho.n)) zero = false;
        if (zero) p += rho.m(b, b).real();
    }
    return p;
}

double population_zero_marginal(const DensityMatrix& rho, int qubit) {
    double p = 0.0;
    for (int b = 0; b < rho.dim(); ++b)
        if (!qubit_bit(b, qubit, rho.n)) p += rho.m(b, b).real();
    return p;
}

std::vector<TimelineEvent> circuit_events(const PrimitiveCircuit& circ,
                                          const NoiseModel& noise, double t_offset) {
    if (!circ.scheduled)
        throw std::invalid_argument("circuit_events: circuit must be scheduled");
    std::vector<TimelineEvent> events;
    for (const auto& s : circ.slices) {
        for (const auto& g : s.gates) {
            if (g.kind == GateKind::Idle) continue;
            TimelineEvent e;
            e.time = t_offset + s.start + g.duration / 2.0;
            e.is_gate = true;
            e.gate = g;
            if (g.kind == GateKind::Cnot) {
                e.depol_p = noise.depol_2q;
                e.depol_mask = (1u << g.q0) | (1u << g.q1);
            } else if (g.kind != GateKind::VZ) {
                e.depol_p = noise.depol_1q;
                e.depol_mask = 1u << g.q0;
            }
            events.push_back(e);
        }
    }
    return events;
}

DensityMatrix simulate_timeline(DensityMatrix rho, std::vector<TimelineEvent> events,
                                double total_time, const DeviceModel& device,
                                const NoiseModel& noise) {
    std::stable_sort(events.begin(), events.end(),
                     [](const TimelineEvent& a, const TimelineEvent& b) {
                         return a.time < b.time;
                     });
    auto free_evolve = [&](double dt) {
        if (dt <= 0) return;
        if (noise.enable_zz) apply_zz_frame(rho, dt / 2, device);
        if (noise.enable_damping)
            for (int q = 0; q < rho.n; ++q)
                apply_damping(rho, q, dt, device.t1[q], device.t2[q]);
        if (noise.enable_zz) apply_zz_frame(rho, dt / 2, device);
    };
    double t = 0.0;
    for (const auto& e : events) {
        free_evolve(e.time - t);
        t = std::max(t, e.time);
        if (e.is_gate) {
            apply_gate(rho, e.gate);
            if (e.depol_p > 0.0) apply_depolarizing(rho, e.depol_mask, e.depol_p);
        } else if (e.depol_p > 0.0) {
            apply_depolarizing(rho, e.depol_mask, e.depol_p);
        }
    }
    free_evolve(total_time - t);
    return rho;
}

DensityMatrix simulate_circuit(const DensityMatrix& rho0,
                               const PrimitiveCircuit& circ,
                               const DeviceModel& device, const NoiseModel& noise) {
    if (rho0.n != circ.n)
        throw std::invalid_argument("simulate_circuit: dimension mismatch");
    return simulate_timeline(rho0, circuit_events(circ, noise),
                             circ.total_duration, device, noise);
}

double coherence_limit_epg(double duration, const std::vector<int>& qubits,
                           const DeviceModel& device) {
    if (qubits.size() == 1) {
        int q = qubits[0];
        return 1.0 - (0.5 + std::exp(-duration / device.t2[q]) / 3.0 +
                      std::exp(-duration / device.t1[q]) / 6.0);
    }
    if (qubits.size() == 2) {
        double fproc = 1.0;
        for (int q : qubits)
            fproc *= (1.0 + std::exp(-duration / device.t1[q]) +
                      2.0 * std::exp(-duration / device.t2[q])) /
                     4.0;
        return 1.0 - (4.0 * fproc + 1.0) / 5.0;
    }
    throw std::invalid_argument("coherence_limit_epg: 1 or 2 qubits only");
}

}  // namespace rbsim

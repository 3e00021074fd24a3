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

#include "rbsim/rb.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rbsim {

namespace {

PrimitiveCircuit remap_qubits(const PrimitiveCircuit& c,
                              const std::vector<int>& to, int device_n) {
    PrimitiveCircuit out;
    out.n = device_n;
    for (auto g : c.gates) {
        g.q0 = to[static_cast<size_t>(g.q0)];
        if (g.q1 >= 0) g.q1 = to[static_cast<size_t>(g.q1)];
        out.push(g);
    }
    return out;
}

/// Compile one subset Clifford to a scheduled device-width circuit.
PrimitiveCircuit compile_clifford(const CliffordTableau& c,
                                  const std::vector<int>& qubits,
                                  const DeviceModel& device) {
    const int ns = static_cast<int>(qubits.size());
    PrimitiveCircuit local;
    if (ns == 1) {
        local = decompose_1q(c, Gateset1Q::PulsesOnly);
    } else if (ns == 2) {
        local = decompose_2q(c, Gateset1Q::PulsesOnly);
    } else {
        // decompose_3q routes internally; remap below is the identity when
        // the subset is [0,1,2] in order.
        local = decompose_3q(c, device.connectivity, Gateset1Q::PulsesAndVz);
    }
    PrimitiveCircuit mapped = remap_qubits(local, qubits, device.n);
    if (ns == 2)
        mapped = route(mapped, device.connectivity, Gateset1Q::PulsesOnly);
    return schedule(mapped, device.durations);
}

uint32_t subset_mask(const std::vector<int>& qubits) {
    uint32_t m = 0;
    for (int q : qubits) m |= 1u << q;
    return m;
}

}  // namespace

// ----- RBPartition -----

void RBPartition::validate(int device_n) const {
    if (subsets.empty())
        throw std::invalid_argument("partition: no subsets");
    std::set<int> seen;
    for (const auto& s : subsets) {
        if (s.empty() || s.size() > 3)
            throw std::invalid_argument("partition: subset size must be 1..3");
        for (int q : s) {
            if (q < 0 || q >= device_n)
                throw std::invalid_argument("partition: qubit out of range");
            if (!seen.insert(q).second)
                throw std::invalid_argument("partition: subsets must be disjoint");
        }
    }
}

std::string RBPartition::label() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < subsets.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (size_t j = 0; j < subsets[i].size(); ++j) {
            if (j) os << ',';
            os << subsets[i][j];
        }
        os << ']';
    }
    os << '}';
    return os.str();
}

bool RBPartition::has_subset_of_size(int k) const {
    for (const auto& s : subsets)
        if (static_cast<int>(s.size()) == k) return true;
    return false;
}

RBPartition RBPartition::parse(const std::string& label) {
    RBPartition p;
    std::vector<int> cur;
    bool in_subset = false;
    int value = -1;
    for (char ch : label) {
        if (ch == '[') {
            in_subset = true;
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            if (!in_subset)
                throw std::invalid_argument("partition parse: digit outside []");
            value = (value < 0 ? 0 : value * 10) + (ch - '0');
        } else if (ch == ',' || ch == ']') {
            if (value >= 0) {
                cur.push_back(value);
                value = -1;
            }
            if (ch == ']') {
                if (!in_subset || cur.empty())
                    throw std::invalid_argument("partition parse: bad subset");
                p.subsets.push_back(cur);
                in_subset = false;
            }
        } else if (ch == '{' || ch == '}' || ch == ' ') {
            // separators
        } else {
            throw std::invalid_argument("partition parse: unexpected character");
        }
    }
    if (p.subsets.empty())
        throw std::invalid_argument("partition parse: empty");
    return p;
}

// ----- RBSpec -----

void RBSpec::validate(int device_n) const {
    partition.validate(device_n);
    if (lengths.size() < 3)
        throw std::invalid_argument("spec: need at least 3 sequence lengths");
    int prev = 0;
    for (int m : lengths) {
        if (m <= prev)
            throw std::invalid_argument("spec: lengths must be >=1 and increasing");
        prev = m;
    }
    if (seeds < 1) throw std::invalid_argument("spec: seeds must be >= 1");
    if (ratio_1q_per_2q < 1)
        throw std::invalid_argument("spec: ratio_1q_per_2q must be >= 1");
}

std::vector<int> RBSpec::default_lengths(int n) {
    switch (n) {
        case 1: return {1, 10, 25, 50, 100, 175, 250};
        case 2: return {1, 5, 10, 20, 35, 50, 75};
        case 3: return {1, 2, 4, 6, 8, 12, 16};
        default: throw std::invalid_argument("default_lengths: n must be 1..3");
    }
}

// ----- sequence generation -----

std::vector<SubsetSequence> generate_sequences(const RBSpec& spec, int m,
                                               uint64_t seed) {
    const bool pair_present = spec.partition.has_subset_of_size(2);
    std::vector<SubsetSequence> out;
    out.reserve(spec.partition.subsets.size());
    for (size_t i = 0; i < spec.partition.subsets.size(); ++i) {
        const auto& qubits = spec.partition.subsets[i];
        const int ns = static_cast<int>(qubits.size());
        const int mult = (ns == 1 && pair_present) ? spec.ratio_1q_per_2q : 1;
        RandomStream rng(derive_seed(seed, 1000, i));
        SubsetSequence seq;
        seq.qubits = qubits;
        CliffordTableau acc = identity_tableau(ns);
        for (int k = 0; k < m * mult; ++k) {
            CliffordTableau c = sample_uniform(ns, rng);
            seq.cliffords.push_back(c);
            acc = compose(acc, c);
        }
        seq.cliffords.push_back(inverse(acc));
        out.push_back(std::move(seq));
    }
    return out;
}

// ----- simulation -----

std::vector<double> simulate_rb_round(const std::vector<SubsetSequence>& seqs,
                                      const DeviceModel& device,
                                      const NoiseModel& noise,
                                      ObservableMode observable) {
    std::vector<TimelineEvent> events;
    double total_time = 0.0;
    for (const auto& seq : seqs) {
        double t = 0.0;
        const uint32_t mask = subset_mask(seq.qubits);
        for (const auto& cliff : seq.cliffords) {
            PrimitiveCircuit circ = compile_clifford(cliff, seq.qubits, device);
            auto ev = circuit_events(circ, noise, t);
            events.insert(events.end(), ev.begin(), ev.end());
            t += circ.total_duration;
            if (noise.depol_per_clifford > 0.0) {
                TimelineEvent e;
                e.time = t;
                e.is_gate = false;
                e.depol_mask = mask;
                e.depol_p = noise.depol_per_clifford;
                events.push_back(e);
            }
        }
        total_time = std::max(total_time, t);
    }
    DensityMatrix rho = DensityMatrix::zero_state(device.n);
    rho = simulate_timeline(std::move(rho), std::move(events), total_time, device,
                            noise);
    std::vector<double> survival;
    survival.reserve(seqs.size());
    for (const auto& seq : seqs) {
        if (observable == ObservableMode::Joint) {
            survival.push_back(population_all_zero(rho, subset_mask(seq.qubits)));
        } else {
            double s = 0;
            for (int q : seq.qubits) s += population_zero_marginal(rho, q);
            survival.push_back(s / static_cast<double>(seq.qubits.size()));
        }
    }
    return survival;
}

RBResult run_experiment(const RBSpec& spec, const DeviceModel& device,
                        const NoiseModel& noise, uint64_t master_seed,
                        int threads) {
    spec.validate(device.n);
    device.validate();
    noise.validate();
    const int n_len = static_cast<int>(spec.lengths.size());
    const int n_sub = static_cast<int>(spec.partition.subsets.size());
    // survival[length][seed][subset]
    std::vector<std::vector<std::vector<double>>> survival(
        n_len, std::vector<std::vector<double>>(
                   spec.seeds, std::vector<double>(n_sub, 0.0)));

    const int n_tasks = n_len * spec.seeds;
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            int task = next.fetch_add(1);
            if (task >= n_tasks) return;
            const int li = task / spec.seeds;
            const int si = task % spec.seeds;
            try {
                uint64_t seed = derive_seed(master_seed, li, si);
                auto seqs = generate_sequences(spec, spec.lengths[li], seed);
                survival[li][si] =
                    simulate_rb_round(seqs, device, noise, spec.observable);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    const int nthreads = std::max(1, std::min(threads, n_tasks));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    RBResult result;
    result.master_seed = master_seed;
    for (int s = 0; s < n_sub; ++s) {
        SubsetResult sub;
        sub.qubits = spec.partition.subsets[s];
        const int ns = static_cast<int>(sub.qubits.size());
        // a 1Q subset paired with a 2Q subset runs ratio Cliffords per base
        // length unit; the fit abscissa is the actual Clifford count so the
        // reported decay is per Clifford
        const int mult = (ns == 1 && spec.partition.has_subset_of_size(2))
                             ? spec.ratio_1q_per_2q
                             : 1;
        for (int m : spec.lengths) sub.curve.lengths.push_back(m * mult);
        std::vector<DecayPoint> pts;
        for (int li = 0; li < n_len; ++li) {
            std::vector<double> vals(spec.seeds);
            for (int si = 0; si < spec.seeds; ++si) vals[si] = survival[li][si][s];
            sub.curve.survival.push_back(vals);
            double mean = 0;
            for (double v : vals) mean += v;
            mean /= spec.seeds;
            double var = 0;
            for (double v : vals) var += (v - mean) * (v - mean);
            double se = spec.seeds > 1
                            ? std::sqrt(var / (spec.seeds - 1.0) / spec.seeds)
                            : 0.0;
            sub.curve.mean.push_back(mean);
            sub.curve.stderr_.push_back(se);
            pts.push_back({static_cast<double>(sub.curve.lengths[li]), mean, se});
        }
        const double b0 = spec.observable == ObservableMode::Joint
                              ? 1.0 / (1 << ns)
                              : 0.5;
        try {
            sub.fit = fit_decay(pts, b0);
        } catch (const FitError& e) {
            throw RBFitError(e.what(), sub.curve);
        }
        if (spec.bootstrap && spec.seeds > 1 && !sub.fit.degenerate) {
            RandomStream rng(derive_seed(master_seed, 2000, s));
            std::vector<double> alphas;
            for (int r = 0; r < spec.bootstrap_resamples; ++r) {
                std::vector<DecayPoint> bpts;
                for (int li = 0; li < n_len; ++li) {
                    double mean = 0;
                    for (int si = 0; si < spec.seeds; ++si)
                        mean += sub.curve.survival[li]
                                    [rng.below(static_cast<uint64_t>(spec.seeds))];
                    mean /= spec.seeds;
                    bpts.push_back({static_cast<double>(sub.curve.lengths[li]), mean,
                                    sub.curve.stderr_[li]});
                }
                try {
                    alphas.push_back(fit_decay(bpts, b0).alpha);
                } catch (const FitError&) {
                    // skip pathological resamples
                }
            }
            if (alphas.size() >= 2) {
                double mu = 0;
                for (double a : alphas) mu += a;
                mu /= alphas.size();
                double var = 0;
                for (double a : alphas) var += (a - mu) * (a - mu);
                sub.fit.alpha_err = std::sqrt(var / (alphas.size() - 1.0));
            }
        }
        const int n_eff = spec.observable == ObservableMode::Joint ? ns : 1;
        sub.epc = epc_from_alpha(n_eff, sub.fit.alpha);
        const double scale = (double)((1 << n_eff) - 1) / (1 << n_eff);
        sub.epc_err = scale * sub.fit.alpha_err;
        result.subsets.push_back(std::move(sub));
    }
    return result;
}

// ----- conversions -----

double epc_from_alpha(int n, double alpha) {
    const double d = static_cast<double>(1 << n);
    return (d - 1.0) / d * (1.0 - alpha);
}

double alpha_from_epc(int n, double epc) {
    const double d = static_cast<double>(1 << n);
    return 1.0 - epc * d / (d - 1.0);
}

double epg_from_epc(double epc, double gates_per_clifford) {
    if (gates_per_clifford <= 0)
        throw std::invalid_argument("epg_from_epc: gates_per_clifford <= 0");
    return epc / gates_per_clifford;
}

double epg_from_epc_compounded(int n, double epc, double gates_per_clifford) {
    if (gates_per_clifford <= 0)
        throw std::invalid_argument("epg_from_epc_compounded: gates <= 0");
    const double alpha = alpha_from_epc(n, epc);
    if (alpha < 0)
        throw std::domain_error("epg_from_epc_compounded: alpha < 0");
    return epc_from_alpha(n, std::pow(alpha, 1.0 / gates_per_clifford));
}

double extract_2q_epg(double epc_2q_clifford, double epg_1q_a, double epg_1q_b,
                      double n1_a, double n1_b, double n_cnot) {
    if (n_cnot <= 0) throw std::invalid_argument("extract_2q_epg: n_cnot <= 0");
    const double alpha_2q = alpha_from_epc(2, epc_2q_clifford);
    const double a = std::pow(alpha_from_epc(1, epg_1q_a), n1_a);
    const double b = std::pow(alpha_from_epc(1, epg_1q_b), n1_b);
    const double locals = (3.0 * a + 3.0 * b + 9.0 * a * b) / 15.0;
    if (locals <= 0 || alpha_2q <= 0)
        throw std::domain_error("extract_2q_epg: inconsistent inputs");
    double alpha_c = std::pow(alpha_2q / locals, 1.0 / n_cnot);
    if (alpha_c > 1.0 + 1e-6)
        throw std::domain_error(
            "extract_2q_epg: 1Q rates already exceed the 2Q error");
    alpha_c = std::min(alpha_c, 1.0);
    return epc_from_alpha(2, alpha_c);
}

// ----- prediction -----

Prediction predict_alpha_3q(const PredictionInputs& inp) {
    const double a = std::pow(inp.alpha_1q, inp.n1 / 3.0);
    const double b = std::pow(inp.alpha_2q, inp.n2 / 3.0);
    Prediction p;
    p.alpha = (a * b * b / 7.0) * (1.0 + 3.0 * a * b + 3.0 * a * a * b);
    p.epc = epc_from_alpha(3, p.alpha);
    return p;
}

Prediction predict_alpha_3q_general(const std::array<double, 3>& alpha1,
                                    const std::array<double, 3>& n1,
                                    const std::array<double, 3>& alpha2,
                                    const std::array<double, 3>& n2) {
    const std::array<double, 3> a = {std::pow(alpha1[0], n1[0]),
                                     std::pow(alpha1[1], n1[1]),
                                     std::pow(alpha1[2], n1[2])};
    const std::array<double, 3> b = {std::pow(alpha2[0], n2[0]),
                                     std::pow(alpha2[1], n2[1]),
                                     std::pow(alpha2[2], n2[2])};
    constexpr int pair_q0[3] = {0, 0, 1};
    constexpr int pair_q1[3] = {1, 2, 2};
    double sum = 0;
    for (int support = 1; support < 8; ++support) {
        double f = 1.0;
        int weight = 1;
        for (int q = 0; q < 3; ++q)
            if (support & (1 << q)) {
                f *= a[q];
                weight *= 3;  // X, Y or Z on this qubit
            }
        for (int p = 0; p < 3; ++p)
            if ((support & (1 << pair_q0[p])) || (support & (1 << pair_q1[p])))
                f *= b[p];
        sum += weight * f;
    }
    Prediction pr;
    pr.alpha = sum / 63.0;
    pr.epc = epc_from_alpha(3, pr.alpha);
    return pr;
}

double coherence_limit_3q_epc(const DeviceModel& device,
                              double avg_clifford_duration) {
    if (device.n != 3)
        throw std::invalid_argument("coherence_limit_3q_epc: need 3 qubits");
    double sum = 0;
    for (uint32_t x = 0; x < 8; ++x) {
        for (uint32_t z = 0; z < 8; ++z) {
            if (x == 0 && z == 0) continue;
            PauliString p = PauliString::from_bits(3, x, z, 0);
            DensityMatrix holder;
            holder.n = 3;
            holder.m = pauli_matrix(p);
            const Cmat before = holder.m;
            for (int q = 0; q < 3; ++q)
                apply_damping(holder, q, avg_clifford_duration, device.t1[q],
                              device.t2[q]);
            sum += (before * holder.m).trace().real() / 8.0;
        }
    }
    const double alpha = sum / 63.0;
    return epc_from_alpha(3, alpha);
}

PredictionComparison compare_prediction(const std::string& label,
                                        double measured_epc, double measured_err,
                                        double predicted_epc,
                                        double predicted_err) {
    PredictionComparison c;
    c.label = label;
    c.measured_epc = measured_epc;
    c.measured_err = measured_err;
    c.predicted_epc = predicted_epc;
    c.predicted_err = predicted_err;
    c.ratio = measured_epc != 0 ? predicted_epc / measured_epc : 0.0;
    return c;
}

std::vector<RBPartition> standard_partitions() {
    return {
        RBPartition{{{0}}},          RBPartition{{{1}}},
        RBPartition{{{2}}},          RBPartition{{{0}, {1}, {2}}},
        RBPartition{{{0, 1}, {2}}},  RBPartition{{{0, 2}, {1}}},
        RBPartition{{{1, 2}, {0}}},  RBPartition{{{0, 1, 2}}},
    };
}

uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
    uint64_t z = master + 0x9E3779B97F4A7C15ull * (stream + 1) +
                 0xBF58476D1CE4E5B9ull * (index + 1);
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace rbsim

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

#include "rbsim/synth.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <functional>
#include <queue>
#include <unordered_map>

namespace rbsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCxCost = 1000.0;
constexpr double kMoveEps = 0.001;  // keeps greedy descent strictly decreasing

/// Intermediate op: either a CNOT or a 1Q Clifford kept in tableau form so
/// adjacent locals merge before pulse emission.
struct Macro {
    bool is_cx = false;
    int a = 0, b = 0;    // CNOT (control, target)
    int q = 0;           // local qubit
    int local_idx = 0;   // index into the 24-table
};

struct Move {
    CliffordTableau t3;  // 3-qubit embedded tableau
    double cost = 0;
    Macro macro;
};

int encode_pauli3(const PauliString& p) {
    return static_cast<int>(p.x | (p.z << 3) | (uint32_t{p.is_negative()} << 6));
}
PauliString decode_pauli3(int code) {
    return PauliString::from_bits(3, code & 7, (code >> 3) & 7,
                                  (code & 64) ? 2 : 0);
}
int encode_state(const PauliString& p, const PauliString& q) {
    return encode_pauli3(p) | (encode_pauli3(q) << 7);
}

struct Tables {
    std::vector<CliffordTableau> c24;
    std::unordered_map<uint64_t, int> idx24;
    std::vector<std::vector<PrimitiveGate>> circ_a;  // {I, X+-90, Y+-90}
    std::vector<std::vector<PrimitiveGate>> circ_b;  // {X+-90, Y-90, VZ}
    std::vector<double> pulses_b;
    std::vector<int> inv24;

    struct D2 {
        uint16_t r = 0, l = 0;
        uint8_t cls = 0;
    };
    std::unordered_map<uint64_t, D2> t2;
    std::array<int, 4> cls_sizes{};

    std::array<std::vector<double>, 3> peel_dist;
    std::array<int, 3> goal_state{};
    std::vector<Move> moves;

    Tables();
};

CliffordTableau tab_of_gate(GateKind k, int n = 1, int q = 0) {
    return gate_tableau(PrimitiveGate::oneq(k, q), n);
}

Tables::Tables() {
    // --- enumerate the 24 one-qubit Cliffords by closure ---
    const CliffordTableau x90 = tab_of_gate(GateKind::Xp90);
    const CliffordTableau y90 = tab_of_gate(GateKind::Yp90);
    c24.push_back(identity_tableau(1));
    idx24[c24[0].key()] = 0;
    for (size_t head = 0; head < c24.size(); ++head) {
        for (const auto* g : {&x90, &y90}) {
            CliffordTableau t = compose(c24[head], *g);
            if (idx24.emplace(t.key(), c24.size()).second) c24.push_back(t);
        }
    }
    assert(c24.size() == 24);

    inv24.resize(24);
    for (int i = 0; i < 24; ++i) inv24[i] = idx24.at(inverse(c24[i]).key());

    // --- minimal-length words, gateset {I, X+-90, Y+-90} ---
    circ_a.assign(24, {});
    {
        const GateKind pulse_kinds[4] = {GateKind::Xp90, GateKind::Xm90,
                                         GateKind::Yp90, GateKind::Ym90};
        std::vector<int> seen(24, 0);
        std::queue<int> bfs;
        seen[0] = 1;
        bfs.push(0);
        while (!bfs.empty()) {
            int i = bfs.front();
            bfs.pop();
            for (GateKind k : pulse_kinds) {
                int j = idx24.at(compose(c24[i], tab_of_gate(k)).key());
                if (!seen[j]) {
                    seen[j] = 1;
                    circ_a[j] = circ_a[i];
                    circ_a[j].push_back(PrimitiveGate::oneq(k, 0));
                    bfs.push(j);
                }
            }
        }
        // identity counts as one I gate in this gateset
        circ_a[0] = {PrimitiveGate::oneq(GateKind::Identity, 0)};
    }

    // --- minimal-pulse words, gateset {X+-90, Y-90} plus virtual Z ---
    circ_b.assign(24, {});
    pulses_b.assign(24, 0.0);
    {
        struct Edge {
            PrimitiveGate gate;
            double cost;
        };
        const std::vector<Edge> edges = {
            {PrimitiveGate::oneq(GateKind::Xp90, 0), 1.0},
            {PrimitiveGate::oneq(GateKind::Xm90, 0), 1.0},
            {PrimitiveGate::oneq(GateKind::Ym90, 0), 1.0},
            {PrimitiveGate::vz(0, kPi / 2), 1.0 / 64},
            {PrimitiveGate::vz(0, -kPi / 2), 1.0 / 64},
            {PrimitiveGate::vz(0, kPi), 1.0 / 64},
        };
        std::vector<double> dist(24, std::numeric_limits<double>::infinity());
        dist[0] = 0;
        using QE = std::pair<double, int>;
        std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
        pq.push({0, 0});
        while (!pq.empty()) {
            auto [d, i] = pq.top();
            pq.pop();
            if (d > dist[i] + 1e-12) continue;
            for (const auto& e : edges) {
                int j = idx24.at(compose(c24[i], gate_tableau(e.gate, 1)).key());
                if (dist[i] + e.cost < dist[j] - 1e-12) {
                    dist[j] = dist[i] + e.cost;
                    circ_b[j] = circ_b[i];
                    circ_b[j].push_back(e.gate);
                    pq.push({dist[j], j});
                }
            }
        }
        for (int i = 0; i < 24; ++i)
            for (const auto& g : circ_b[i]) pulses_b[i] += g.is_pulse() ? 1.0 : 0.0;
    }

    // --- 2Q entangling-class table ---
    {
        std::vector<CliffordTableau> locals;
        locals.reserve(576);
        for (int a = 0; a < 24; ++a)
            for (int b = 0; b < 24; ++b)
                locals.push_back(
                    compose(embed_1q(c24[a], 0, 2), embed_1q(c24[b], 1, 2)));
        const CliffordTableau cx01 = gate_tableau(PrimitiveGate::cnot(0, 1), 2);
        const CliffordTableau cx10 = gate_tableau(PrimitiveGate::cnot(1, 0), 2);
        CliffordTableau ent[4];
        ent[0] = identity_tableau(2);
        ent[1] = cx01;
        ent[2] = compose(cx01, cx10);
        ent[3] = compose(ent[2], cx01);
        t2.reserve(16384);
        for (int cls = 0; cls < 4; ++cls) {
            for (int r = 0; r < 576; ++r) {
                CliffordTableau mid = compose(locals[r], ent[cls]);
                for (int l = 0; l < 576; ++l) {
                    CliffordTableau t = compose(mid, locals[l]);
                    auto [it, fresh] = t2.emplace(
                        t.key(), D2{static_cast<uint16_t>(r),
                                    static_cast<uint16_t>(l),
                                    static_cast<uint8_t>(cls)});
                    if (fresh) ++cls_sizes[cls];
                }
            }
        }
        assert(t2.size() == 11520);
    }

    // --- move set and per-target-qubit disentangling distances ---
    for (int q = 0; q < 3; ++q) {
        for (int i = 1; i < 24; ++i) {  // skip identity
            Move m;
            m.t3 = embed_1q(c24[i], q, 3);
            m.cost = pulses_b[i] + kMoveEps;
            m.macro = {false, 0, 0, q, i};
            moves.push_back(m);
        }
    }
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            Move m;
            m.t3 = gate_tableau(PrimitiveGate::cnot(a, b), 3);
            m.cost = kCxCost + kMoveEps;
            m.macro = {true, a, b, 0, 0};
            moves.push_back(m);
        }
    }
    auto transition = [&](const Move& m, int s) {
        PauliString p = decode_pauli3(s & 127);
        PauliString q = decode_pauli3(s >> 7);
        return encode_state(apply_to_pauli(m.t3, p), apply_to_pauli(m.t3, q));
    };
    for (int tq = 0; tq < 3; ++tq) {
        auto& dist = peel_dist[tq];
        dist.assign(1 << 14, std::numeric_limits<double>::infinity());
        goal_state[tq] = encode_state(PauliString::single(3, tq, 1),
                                      PauliString::single(3, tq, 3));
        using QE = std::pair<double, int>;
        std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
        dist[goal_state[tq]] = 0;
        pq.push({0, goal_state[tq]});
        while (!pq.empty()) {
            auto [d, s] = pq.top();
            pq.pop();
            if (d > dist[s] + 1e-12) continue;
            for (const auto& m : moves) {
                int s2 = transition(m, s);
                if (d + m.cost < dist[s2] - 1e-12) {
                    dist[s2] = d + m.cost;
                    pq.push({dist[s2], s2});
                }
            }
        }
    }
}

const Tables& tables() {
    static const Tables t;
    return t;
}

/// Merge adjacent locals per qubit, then emit pulses from the chosen
/// gateset. Identity locals vanish.
PrimitiveCircuit emit_macros(const std::vector<Macro>& macros, int n,
                             Gateset1Q gateset) {
    const Tables& tb = tables();
    PrimitiveCircuit circ;
    circ.n = n;
    std::vector<int> pending(n, 0);  // index into c24, 0 = identity

    auto flush = [&](int q) {
        int idx = pending[q];
        pending[q] = 0;
        if (idx == 0) return;
        const auto& word =
            gateset == Gateset1Q::PulsesOnly ? tb.circ_a[idx] : tb.circ_b[idx];
        for (auto g : word) {
            g.q0 = q;
            circ.push(g);
        }
    };

    for (const auto& m : macros) {
        if (m.is_cx) {
            flush(m.a);
            flush(m.b);
            circ.push(PrimitiveGate::cnot(m.a, m.b));
        } else {
            pending[m.q] = tb.idx24.at(
                compose(tb.c24[pending[m.q]], tb.c24[m.local_idx]).key());
        }
    }
    for (int q = 0; q < n; ++q) flush(q);
    return circ;
}

/// Macros for a table 2Q decomposition placed on device qubits (qa, qb).
std::vector<Macro> macros_2q(const Tables::D2& d, int qa, int qb) {
    std::vector<Macro> ms;
    ms.push_back({false, 0, 0, qa, d.r / 24});
    ms.push_back({false, 0, 0, qb, d.r % 24});
    switch (d.cls) {
        case 0:
            break;
        case 1:
            ms.push_back({true, qa, qb, 0, 0});
            break;
        case 2:
            ms.push_back({true, qa, qb, 0, 0});
            ms.push_back({true, qb, qa, 0, 0});
            break;
        case 3:
            ms.push_back({true, qa, qb, 0, 0});
            ms.push_back({true, qb, qa, 0, 0});
            ms.push_back({true, qa, qb, 0, 0});
            break;
    }
    ms.push_back({false, 0, 0, qa, d.l / 24});
    ms.push_back({false, 0, 0, qb, d.l % 24});
    return ms;
}

uint64_t key_1q(const CliffordTableau& c) { return c.key(); }

}  // namespace

const std::vector<CliffordTableau>& all_1q_cliffords() { return tables().c24; }

double average_1q_table_gates() {
    double total = 0;
    for (const auto& w : tables().circ_a) total += static_cast<double>(w.size());
    return total / 24.0;
}

std::array<int, 4> class_sizes_2q() { return tables().cls_sizes; }

double expected_2q_cnots() {
    const auto s = class_sizes_2q();
    return (0.0 * s[0] + 1.0 * s[1] + 2.0 * s[2] + 3.0 * s[3]) / 11520.0;
}

PrimitiveCircuit decompose_1q(const CliffordTableau& c, Gateset1Q gateset) {
    if (c.n != 1) throw std::invalid_argument("decompose_1q: expected n=1");
    const Tables& tb = tables();
    int idx = tb.idx24.at(key_1q(c));
    PrimitiveCircuit circ;
    circ.n = 1;
    circ.gates = gateset == Gateset1Q::PulsesOnly ? tb.circ_a[idx] : tb.circ_b[idx];
    return circ;
}

int cnot_class_2q(const CliffordTableau& c) {
    if (c.n != 2) throw std::invalid_argument("cnot_class_2q: expected n=2");
    return tables().t2.at(c.key()).cls;
}

PrimitiveCircuit decompose_2q(const CliffordTableau& c, Gateset1Q gateset) {
    if (c.n != 2) throw std::invalid_argument("decompose_2q: expected n=2");
    const auto& d = tables().t2.at(c.key());
    return emit_macros(macros_2q(d, 0, 1), 2, gateset);
}

PrimitiveCircuit decompose_3q(const CliffordTableau& c,
                              const ConnectivityGraph& conn, Gateset1Q gateset) {
    if (c.n != 3) throw std::invalid_argument("decompose_3q: expected n=3");
    if (!conn.connected(3))
        throw std::invalid_argument("decompose_3q: disconnected graph");
    const Tables& tb = tables();

    PrimitiveCircuit best;
    bool have_best = false;
    auto counts_of = [](const PrimitiveCircuit& circ) {
        int cx = 0, pulses = 0;
        for (const auto& g : circ.gates) {
            cx += g.kind == GateKind::Cnot;
            pulses += g.is_pulse() || g.kind == GateKind::Identity;
        }
        return std::pair<int, int>{cx, pulses};
    };

    for (int tq = 0; tq < 3; ++tq) {
        // Greedy descent along the precomputed distances disentangles tq.
        std::vector<Macro> peel;
        std::vector<const Move*> applied;
        int s = encode_state(c.rows[tq], c.rows[3 + tq]);
        const auto& dist = tb.peel_dist[tq];
        while (s != tb.goal_state[tq]) {
            const Move* chosen = nullptr;
            int s_next = -1;
            for (const auto& m : tb.moves) {
                PauliString p = decode_pauli3(s & 127);
                PauliString q = decode_pauli3(s >> 7);
                int s2 = encode_state(apply_to_pauli(m.t3, p),
                                      apply_to_pauli(m.t3, q));
                if (dist[s2] + m.cost < dist[s] + 1e-9) {
                    chosen = &m;
                    s_next = s2;
                    break;
                }
            }
            if (!chosen) throw std::logic_error("decompose_3q: descent stuck");
            applied.push_back(chosen);
            s = s_next;
        }
        CliffordTableau cur = c;
        for (const Move* m : applied) cur = compose(cur, m->t3);

        // Remaining action lives on the other two qubits; finish by table.
        int qa = tq == 0 ? 1 : 0;
        int qb = tq == 2 ? 1 : 2;
        CliffordTableau c2;
        c2.n = 2;
        auto restrict2 = [&](const PauliString& p) {
            uint32_t im = 1u << tq;
            if ((p.support() & im) != 0)
                throw std::logic_error("decompose_3q: peel left residue");
            uint32_t x = ((p.x >> qa) & 1) | (((p.x >> qb) & 1) << 1);
            uint32_t z = ((p.z >> qa) & 1) | (((p.z >> qb) & 1) << 1);
            return PauliString::from_bits(2, x, z, p.sign_exp());
        };
        c2.rows[0] = restrict2(cur.rows[qa]);
        c2.rows[1] = restrict2(cur.rows[qb]);
        c2.rows[2] = restrict2(cur.rows[3 + qa]);
        c2.rows[3] = restrict2(cur.rows[3 + qb]);

        std::vector<Macro> macros = macros_2q(tb.t2.at(c2.key()), qa, qb);
        // Undo the peel: reversed order, each op inverted.
        for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
            Macro m = (*it)->macro;
            if (!m.is_cx) m.local_idx = tb.inv24[m.local_idx];
            macros.push_back(m);
        }

        PrimitiveCircuit cand = route(emit_macros(macros, 3, gateset), conn, gateset);
        if (!have_best || counts_of(cand) < counts_of(best)) {
            best = std::move(cand);
            have_best = true;
        }
    }
    return best;
}

PrimitiveCircuit route(const PrimitiveCircuit& circ, const ConnectivityGraph& conn,
                       Gateset1Q gateset) {
    PrimitiveCircuit out;
    out.n = circ.n;
    const Tables& tb = tables();
    // X<->Z basis change used to flip CNOT direction.
    static const uint64_t h_key = [] {
        CliffordTableau h;
        h.n = 1;
        h.rows[0] = PauliString::single(1, 0, 3);
        h.rows[1] = PauliString::single(1, 0, 1);
        return h.key();
    }();
    const auto& h_word = gateset == Gateset1Q::PulsesOnly
                             ? tb.circ_a[tb.idx24.at(h_key)]
                             : tb.circ_b[tb.idx24.at(h_key)];
    auto push_h = [&](int q) {
        for (auto g : h_word) {
            g.q0 = q;
            out.push(g);
        }
    };
    const std::function<void(int, int)> push_cnot = [&](int c, int t) {
        if (conn.has_directed(c, t)) {
            out.push(PrimitiveGate::cnot(c, t));
        } else if (conn.has_directed(t, c)) {
            push_h(c);
            push_h(t);
            out.push(PrimitiveGate::cnot(t, c));
            push_h(c);
            push_h(t);
        } else {
            int relay = -1;
            for (int m = 0; m < circ.n; ++m) {
                if (m != c && m != t && conn.has_undirected(c, m) &&
                    conn.has_undirected(m, t)) {
                    relay = m;
                    break;
                }
            }
            if (relay < 0)
                throw std::invalid_argument("route: unroutable CNOT pair");
            // CX(c,t) = CX(c,m) CX(m,t) CX(c,m) CX(m,t)
            push_cnot(c, relay);
            push_cnot(relay, t);
            push_cnot(c, relay);
            push_cnot(relay, t);
        }
    };
    for (const auto& g : circ.gates) {
        if (g.kind == GateKind::Cnot)
            push_cnot(g.q0, g.q1);
        else
            out.push(g);
    }
    return out;
}

bool verify(const PrimitiveCircuit& circ, const CliffordTableau& c) {
    return circuit_tableau(circ) == c;
}

}  // namespace rbsim

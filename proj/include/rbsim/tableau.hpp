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

#ifndef RBSIM_TABLEAU_HPP
#define RBSIM_TABLEAU_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "rbsim/pauli.hpp"

namespace rbsim {

/// Deterministic random stream used everywhere sampling is needed.
/// Bits are drawn directly from the engine so results do not depend on
/// library-specific distribution implementations.
class RandomStream {
  public:
    explicit RandomStream(uint64_t seed) : eng_(seed) {}

    uint64_t bits(int count) {
        // count <= 64
        return eng_() >> (64 - count);
    }
    bool coin() { return (eng_() >> 63) != 0; }

    /// Uniform integer in [0, bound).
    uint64_t below(uint64_t bound) {
        uint64_t mask = ~uint64_t{0} >> std::countl_zero(bound - 1 | 1);
        for (;;) {
            uint64_t v = eng_() & mask;
            if (v < bound) return v;
        }
    }

    double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gauss() {
        double u = 0;
        while (u == 0) u = uniform01();
        double v = uniform01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
    }

  private:
    std::mt19937_64 eng_;
};

/// Clifford group element on n qubits in stabilizer-tableau form.
///
/// rows[q]   = conjugation image of X_q,
/// rows[n+q] = conjugation image of Z_q,
/// each a Hermitian signed Pauli. Global phase is not represented;
/// equality is phase-bit exact at the tableau level.
struct CliffordTableau {
    int n = 1;
    std::array<PauliString, 2 * kMaxQubits> rows;

    CliffordTableau() = default;

    const PauliString& x_image(int q) const { return rows[q]; }
    const PauliString& z_image(int q) const { return rows[n + q]; }

    bool operator==(const CliffordTableau& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < 2 * n; ++i)
            if (!(rows[i] == o.rows[i])) return false;
        return true;
    }

    /// Binary symplectic row i as 2n-bit word: x bits low, z bits high.
    uint32_t symplectic_row(int i) const {
        return rows[i].x | (rows[i].z << n);
    }

    /// Mᵀ·Ω·M = Ω over GF(2), plus Hermiticity of every row.
    bool is_valid() const;

    /// Compact key for hashing (valid for n <= 3).
    uint64_t key() const;

    /// Text form: one record, row-major symplectic matrix plus phase bits.
    std::string serialize() const;
    static CliffordTableau deserialize(const std::string& line);
};

CliffordTableau identity_tableau(int n);
CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);
CliffordTableau inverse(const CliffordTableau& c);
PauliString apply_to_pauli(const CliffordTableau& c, const PauliString& p);
CliffordTableau sample_uniform(int n, RandomStream& rng);

/// Exact Clifford group order: 2^{n^2+2n} * prod_{j=1..n} (4^j - 1).
struct GroupSize {
    int n;
    uint64_t order;
};
GroupSize group_order(int n);

/// Tensor embedding of a 1-qubit tableau into an n-qubit identity context.
CliffordTableau embed_1q(const CliffordTableau& g, int qubit, int n);

}  // namespace rbsim

#endif  // RBSIM_TABLEAU_HPP

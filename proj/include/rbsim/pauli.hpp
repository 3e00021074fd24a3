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

#ifndef RBSIM_PAULI_HPP
#define RBSIM_PAULI_HPP

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <string>

namespace rbsim {

/// Hard cap on register size. RB here needs n <= 3; the representation
/// works for any n up to the cap.
inline constexpr int kMaxQubits = 8;

/// Signed Pauli operator on n qubits.
///
/// Internally stored in X/Z normal form: P = i^phase_exp * prod_q X_q^{x_q} Z_q^{z_q}
/// with x/z as bitmasks (qubit q = bit q). A site with both bits set is a Y
/// (Y = i X Z), so the user-facing sign is i^{phase_exp - #Y}.
struct PauliString {
    int n = 1;
    uint32_t x = 0;
    uint32_t z = 0;
    uint8_t phase_exp = 0;  // exponent of i, mod 4, in X/Z normal form

    PauliString() = default;
    explicit PauliString(int n_qubits) : n(n_qubits) {
        if (n_qubits < 1 || n_qubits > kMaxQubits) {
            throw std::invalid_argument("PauliString: qubit count out of range");
        }
    }

    bool operator==(const PauliString& o) const {
        return n == o.n && x == o.x && z == o.z && phase_exp == o.phase_exp;
    }

    int num_y() const { return std::popcount(x & z); }

    /// Exponent of i in the letters form (sign in {+1, i, -1, -i} as i^k).
    int sign_exp() const { return (phase_exp - num_y()) & 3; }

    bool is_hermitian() const { return (sign_exp() & 1) == 0; }
    bool is_negative() const { return sign_exp() == 2; }

    uint32_t support() const { return x | z; }
    int weight() const { return std::popcount(support()); }
    bool is_identity_letters() const { return support() == 0; }

    bool commutes_with(const PauliString& o) const {
        return ((std::popcount(x & o.z) + std::popcount(z & o.x)) & 1) == 0;
    }

    PauliString& operator*=(const PauliString& o) {
        if (n != o.n) throw std::invalid_argument("PauliString: size mismatch");
        phase_exp = static_cast<uint8_t>(
            (phase_exp + o.phase_exp + 2 * std::popcount(z & o.x)) & 3);
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    PauliString operator*(const PauliString& o) const {
        PauliString r = *this;
        r *= o;
        return r;
    }

    void negate() { phase_exp = static_cast<uint8_t>((phase_exp + 2) & 3); }

    /// Letter at qubit q: 0=I, 1=X, 2=Y, 3=Z.
    int letter(int q) const {
        bool xb = (x >> q) & 1, zb = (z >> q) & 1;
        if (xb && zb) return 2;
        if (xb) return 1;
        if (zb) return 3;
        return 0;
    }

    // Note: does not touch phase_exp.
    void set_letter(int q, int letter) {
        uint32_t m = 1u << q;
        x &= ~m;
        z &= ~m;
        if (letter == 1 || letter == 2) x |= m;
        if (letter == 3 || letter == 2) z |= m;
    }

    /// "+XIZ" style, qubit 0 leftmost.
    std::string str() const {
        static const char* kSign[4] = {"+", "+i", "-", "-i"};
        std::string s = kSign[sign_exp()];
        for (int q = 0; q < n; ++q) s += "IXYZ"[letter(q)];
        return s;
    }

    static PauliString identity(int n) { return PauliString(n); }

    /// Single-letter Pauli with + sign. letter: 1=X, 2=Y, 3=Z.
    static PauliString single(int n, int q, int letter) {
        PauliString p(n);
        p.set_letter(q, letter);
        p.phase_exp = static_cast<uint8_t>(p.num_y() & 3);  // letters sign +1
        return p;
    }

    /// Build from bitmasks with a given letters-form sign exponent (i^k).
    static PauliString from_bits(int n, uint32_t x, uint32_t z, int sign_exp = 0) {
        PauliString p(n);
        p.x = x;
        p.z = z;
        p.phase_exp = static_cast<uint8_t>((sign_exp + p.num_y()) & 3);
        return p;
    }
};

}  // namespace rbsim

#endif  // RBSIM_PAULI_HPP

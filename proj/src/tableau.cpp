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

#include "rbsim/tableau.hpp"

#include <sstream>

namespace rbsim {

namespace {

inline int parity(uint32_t v) { return std::popcount(v) & 1; }

/// Symplectic inner product of 2n-bit words (x low, z high).
inline int sym_inner(uint32_t a, uint32_t b, int n) {
    uint32_t ax = a & ((1u << n) - 1), az = a >> n;
    uint32_t bx = b & ((1u << n) - 1), bz = b >> n;
    return parity((ax & bz) ^ (az & bx));
}

}  // namespace

GroupSize group_order(int n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("group_order: bad n");
    uint64_t order = uint64_t{1} << (n * n + 2 * n);
    for (int j = 1; j <= n; ++j) order *= (uint64_t{1} << (2 * j)) - 1;
    return {n, order};
}

CliffordTableau identity_tableau(int n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("identity_tableau: bad n");
    CliffordTableau c;
    c.n = n;
    for (int q = 0; q < n; ++q) {
        c.rows[q] = PauliString::single(n, q, 1);
        c.rows[n + q] = PauliString::single(n, q, 3);
    }
    return c;
}

PauliString apply_to_pauli(const CliffordTableau& c, const PauliString& p) {
    if (c.n != p.n) throw std::invalid_argument("apply_to_pauli: size mismatch");
    PauliString r(c.n);
    r.phase_exp = p.phase_exp;
    for (int q = 0; q < c.n; ++q) {
        if ((p.x >> q) & 1) r *= c.rows[q];
        if ((p.z >> q) & 1) r *= c.rows[c.n + q];
    }
    return r;
}

CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
    if (a.n != b.n) throw std::invalid_argument("compose: size mismatch");
    CliffordTableau c;
    c.n = a.n;
    for (int i = 0; i < 2 * a.n; ++i) c.rows[i] = apply_to_pauli(b, a.rows[i]);
    return c;
}

bool CliffordTableau::is_valid() const {
    for (int i = 0; i < 2 * n; ++i) {
        if (!rows[i].is_hermitian()) return false;
        if (rows[i].support() == 0) return false;
    }
    // Correct commutation relations among generator images, which is
    // equivalent to the symplectic condition.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!rows[i].commutes_with(rows[j])) return false;
            if (!rows[n + i].commutes_with(rows[n + j])) return false;
            bool anti = !rows[i].commutes_with(rows[n + j]);
            if (anti != (i == j)) return false;
        }
    }
    return true;
}

uint64_t CliffordTableau::key() const {
    // Per row: n x-bits, n z-bits, 1 sign bit. n <= 3 -> 6*7 = 42 bits.
    uint64_t k = 0;
    for (int i = 0; i < 2 * n; ++i) {
        uint64_t r = rows[i].x | (rows[i].z << n) |
                     (uint64_t{rows[i].is_negative()} << (2 * n));
        k = (k << (2 * n + 1)) | r;
    }
    return k;
}

CliffordTableau inverse(const CliffordTableau& c) {
    const int n = c.n;
    const uint32_t xmask = (1u << n) - 1;
    // Binary symplectic inverse: Minv = Omega * M^T * Omega.
    // With rows as (x | z<<n), Omega swaps the x and z halves.
    uint32_t m[2 * kMaxQubits];
    for (int i = 0; i < 2 * n; ++i) m[i] = c.symplectic_row(i);
    CliffordTableau inv;
    inv.n = n;
    for (int i = 0; i < 2 * n; ++i) {
        // Row i of Minv: entry j = <omega-swapped structure>.
        // (Omega M^T Omega)_{ij} = M_{sj, si} where s swaps halves.
        uint32_t row = 0;
        int si = (i + n) % (2 * n);
        for (int j = 0; j < 2 * n; ++j) {
            int sj = (j + n) % (2 * n);
            uint32_t bit = (m[sj] >> si) & 1;
            row |= bit << j;
        }
        inv.rows[i] = PauliString::from_bits(n, row & xmask, row >> n, 0);
    }
    // Fix phase bits: need compose(c, inv) == identity. Flipping the sign
    // of inv row k multiplies inv's image of P by (-1)^{P bit k}; solve
    // M f = e over GF(2) with e the residual signs, f = Minv e.
    CliffordTableau e = compose(c, inv);
    uint32_t evec = 0;
    for (int i = 0; i < 2 * n; ++i)
        if (e.rows[i].is_negative()) evec |= 1u << i;
    for (int k = 0; k < 2 * n; ++k) {
        uint32_t minv_row_k = inv.symplectic_row(k);
        // f_k = Minv row k (as matrix row) dot e. Row k of Minv as a matrix
        // is exactly the bits placed above.
        if (parity(minv_row_k & evec)) inv.rows[k].negate();
    }
    return inv;
}

CliffordTableau sample_uniform(int n, RandomStream& rng) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("sample_uniform: bad n");
    const uint32_t full = (1u << (2 * n)) - 1;
    uint32_t xv[kMaxQubits], zv[kMaxQubits];
    for (int i = 0; i < n; ++i) {
        // Uniform nonzero vector commuting with all previously fixed pairs.
        for (;;) {
            uint32_t v = static_cast<uint32_t>(rng.bits(2 * n)) & full;
            if (v == 0) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = !sym_inner(v, xv[j], n) && !sym_inner(v, zv[j], n);
            if (ok) {
                xv[i] = v;
                break;
            }
        }
        // Uniform partner: anticommutes with xv[i], commutes with the rest.
        for (;;) {
            uint32_t w = static_cast<uint32_t>(rng.bits(2 * n)) & full;
            if (!sym_inner(w, xv[i], n)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = !sym_inner(w, xv[j], n) && !sym_inner(w, zv[j], n);
            if (ok) {
                zv[i] = w;
                break;
            }
        }
    }
    CliffordTableau c;
    c.n = n;
    const uint32_t xmask = (1u << n) - 1;
    for (int i = 0; i < n; ++i) {
        c.rows[i] = PauliString::from_bits(n, xv[i] & xmask, xv[i] >> n,
                                           rng.coin() ? 2 : 0);
        c.rows[n + i] = PauliString::from_bits(n, zv[i] & xmask, zv[i] >> n,
                                               rng.coin() ? 2 : 0);
    }
    return c;
}

CliffordTableau embed_1q(const CliffordTableau& g, int qubit, int n) {
    if (g.n != 1) throw std::invalid_argument("embed_1q: expected 1q tableau");
    CliffordTableau c = identity_tableau(n);
    auto lift = [&](const PauliString& p1) {
        PauliString p = PauliString::from_bits(n, p1.x << qubit, p1.z << qubit,
                                               p1.sign_exp());
        return p;
    };
    c.rows[qubit] = lift(g.rows[0]);
    c.rows[n + qubit] = lift(g.rows[1]);
    return c;
}

std::string CliffordTableau::serialize() const {
    // Row-major symplectic bits then phase bits, space separated groups.
    std::ostringstream os;
    os << n << ' ';
    for (int i = 0; i < 2 * n; ++i) {
        uint32_t r = symplectic_row(i);
        for (int b = 0; b < 2 * n; ++b) os << ((r >> b) & 1);
        os << ' ';
    }
    for (int i = 0; i < 2 * n; ++i) os << (rows[i].is_negative() ? '1' : '0');
    return os.str();
}

CliffordTableau CliffordTableau::deserialize(const std::string& line) {
    std::istringstream is(line);
    int n = 0;
    if (!(is >> n) || n < 1 || n > kMaxQubits)
        throw std::invalid_argument("tableau deserialize: bad qubit count");
    CliffordTableau c;
    c.n = n;
    const uint32_t xmask = (1u << n) - 1;
    std::string tok;
    uint32_t rowbits[2 * kMaxQubits];
    for (int i = 0; i < 2 * n; ++i) {
        if (!(is >> tok) || tok.size() != static_cast<size_t>(2 * n))
            throw std::invalid_argument("tableau deserialize: bad row");
        uint32_t r = 0;
        for (int b = 0; b < 2 * n; ++b)
            if (tok[b] == '1') r |= 1u << b;
        rowbits[i] = r;
    }
    if (!(is >> tok) || tok.size() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("tableau deserialize: bad phases");
    for (int i = 0; i < 2 * n; ++i) {
        c.rows[i] = PauliString::from_bits(n, rowbits[i] & xmask, rowbits[i] >> n,
                                           tok[i] == '1' ? 2 : 0);
    }
    if (!c.is_valid()) throw std::invalid_argument("tableau deserialize: not symplectic");
    return c;
}

}  // namespace rbsim

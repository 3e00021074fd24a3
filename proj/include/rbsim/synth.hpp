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

#ifndef RBSIM_SYNTH_HPP
#define RBSIM_SYNTH_HPP

#include "rbsim/circuit.hpp"

namespace rbsim {

/// Primitive 1Q gateset used for compilation.
///  PulsesOnly:  {I, X+90, X-90, Y+90, Y-90}  (1Q and 2Q Cliffords)
///  PulsesAndVz: {X+90, X-90, Y-90} plus virtual Z  (3Q Cliffords)
enum class Gateset1Q { PulsesOnly, PulsesAndVz };

/// Minimal-length table circuit for a 1-qubit Clifford. The identity
/// Clifford compiles to a single I gate under PulsesOnly and to the empty
/// circuit under PulsesAndVz.
PrimitiveCircuit decompose_1q(const CliffordTableau& c,
                              Gateset1Q gateset = Gateset1Q::PulsesOnly);

/// Class-based 2Q synthesis: 0/1/2/3 CNOTs by entangling class, with local
/// dressing from the 1Q gateset.
PrimitiveCircuit decompose_2q(const CliffordTableau& c,
                              Gateset1Q gateset = Gateset1Q::PulsesOnly);

/// Entangling class of a 2Q Clifford = number of CNOTs its table circuit
/// uses (0, 1, 2 or 3).
int cnot_class_2q(const CliffordTableau& c);

/// 3Q synthesis: disentangle one qubit (cheapest of the three, found by a
/// precomputed shortest-path table over signed Pauli pairs), then finish
/// the remaining pair with the 2Q class table. Emits only CNOTs allowed by
/// `conn`, reversing direction via local conjugation where needed.
PrimitiveCircuit decompose_3q(const CliffordTableau& c,
                              const ConnectivityGraph& conn,
                              Gateset1Q gateset = Gateset1Q::PulsesAndVz);

/// Rewrite every CNOT of `circ` onto allowed directed edges: direction
/// flips via basis-change conjugation, missing pairs via the 4-CNOT relay
/// through a common neighbor. Rejects unroutable pairs.
PrimitiveCircuit route(const PrimitiveCircuit& circ, const ConnectivityGraph& conn,
                       Gateset1Q gateset = Gateset1Q::PulsesAndVz);

/// True iff the circuit's induced tableau equals c, phases included.
bool verify(const PrimitiveCircuit& circ, const CliffordTableau& c);

/// All 24 one-qubit Clifford tableaux (stable order).
const std::vector<CliffordTableau>& all_1q_cliffords();

/// Average table length over the 24 1Q Cliffords under PulsesOnly
/// (gate count, I included). Exactly 53/24.
double average_1q_table_gates();

/// Exact expected CNOT count of a uniform 2Q Clifford from the class
/// sizes (576,5184,5184,576)/11520. Exactly 1.5.
double expected_2q_cnots();

/// Class sizes of the 2Q entangling classes, index = CNOT count.
std::array<int, 4> class_sizes_2q();

}  // namespace rbsim

#endif  // RBSIM_SYNTH_HPP

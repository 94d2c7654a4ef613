// Copyright 2026 The Wiregram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiregram/diagram.hpp"
#include "wiregram/functor.hpp"

namespace wiregram {

// Gate catalog. Phases are in half-turns: Rz(1) is a rotation by pi.
// Two-qubit gates act on adjacent wires with the control on the left.

Box H();
Box X();
Box Y();
Box Z();
Box S();
Box T();
Box CX();
Box CZ();
Box SWAP();
/// diag(e^{-i pi t}, e^{i pi t}).
Box Rz(const Expr& phase);
/// H . Rz(t) . H.
Box Rx(const Expr& phase);
/// Rz(t) on the right wire, controlled by the left wire.
Box CRz(const Expr& phase);
/// A named gate with explicit entries on `n_qubits` wires.
Box custom_gate(const std::string& name, std::size_t n_qubits,
                std::vector<Complex> entries);

/// The scalar `coeff * factor`.
Box scalar(Complex coeff, const Expr& factor = Expr(1.0));
/// The scalar e^{i pi t}.
Box phase_scalar(const Expr& phase);

/// Computational basis state; empty domain, codomain qubit^n.
Box Ket(std::vector<int> bits);
/// Post-selected measurement; the dagger of Ket.
Box Bra(std::vector<int> bits);

template <class... Bits>
Box Ket(int first, Bits... rest) {
  return Ket(std::vector<int>{first, static_cast<int>(rest)...});
}
template <class... Bits>
Box Bra(int first, Bits... rest) {
  return Bra(std::vector<int>{first, static_cast<int>(rest)...});
}

/// Measurement of a quantum wire into a classical wire of the same
/// dimension (qubit to bit, qudit[n] to digit[n]).
Box Measure(const Ob& wire = qubit[0]);
/// Preparation of a quantum wire from a classical one.
Box Encode(const Ob& wire = bit[0]);
/// Traces out quantum wires and marginalises classical wires of `x`.
Box Discard(const Ty& x = qubit);
/// `gate` applied when the classical bit on the left reads 1.
Box Controlled(const Box& gate);

/// Matrix of a catalog or custom gate. Throws UnsupportedBox for unknown
/// names and UnboundVariable for free phase variables.
Tensor gate_tensor(const Box& gate, const Params& params = {});
Tensor ket_tensor(const std::vector<int>& bits);
Complex scalar_value(const Box& box, const Params& params = {});

/// Standard interpretation: qubit and bit wires are 2-dimensional, labels
/// with a dimension hint use it, catalog boxes map to their matrices.
TensorFunctor quantum_functor();

/// First box or wire that makes `c` classical-quantum, if any.
std::optional<std::string> find_mixed(const Diagram& c);
bool is_mixed(const Diagram& c);

/// Amplitude semantics. Throws SemanticsError on classical-quantum circuits.
Tensor eval_pure(const Diagram& c, const Params& params = {});
Tensor eval_pure(const Sum& s, const Params& params = {});

/// Per layer: H on every qubit, then CRz(params[layer][i]) on wires
/// (i, i+1) from left to right. Throws Error on a shape mismatch.
Diagram iqp_ansatz(std::size_t n_qubits,
                   const std::vector<std::vector<Expr>>& params);

/// Ket(0, 0) >> H @ Id(qubit) >> CX.
Diagram bell_state();
/// Ket(1) @ bell_state() >> bell_state().dagger() @ Id(qubit). Evaluates to
/// Ket(1) scaled by 0.5: post-selected teleportation succeeds with
/// probability 0.5.
Diagram teleportation();

}  // namespace wiregram

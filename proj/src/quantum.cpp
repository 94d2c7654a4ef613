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

#include "wiregram/quantum.hpp"

#include <cmath>
#include <numbers>

#include "wiregram/errors.hpp"

namespace wiregram {

namespace {

using std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
const Complex kI{0.0, 1.0};

Box fixed_gate(const std::string& name, std::size_t n_qubits) {
  return Box{name, qubit.pow(n_qubits), qubit.pow(n_qubits), BoxKind::Gate, {}, false};
}

Box phase_gate(const std::string& name, std::size_t n_qubits, const Expr& phase) {
  return Box{name, qubit.pow(n_qubits), qubit.pow(n_qubits), BoxKind::Gate,
             Phase{phase}, false};
}

Tensor matrix(std::size_t n_qubits, std::vector<Complex> rows) {
  // Written as the usual matrix M[out][in]; stored transposed as [in][out].
  const std::size_t n = std::size_t{1} << n_qubits;
  std::vector<Complex> entries(n * n);
  for (std::size_t out = 0; out < n; ++out) {
    for (std::size_t in = 0; in < n; ++in) entries[in * n + out] = rows[out * n + in];
  }
  std::vector<std::size_t> dims(n_qubits, 2);
  return Tensor(Dim(dims), Dim(dims), std::move(entries));
}

double phase_of(const Box& box, const Params& params) {
  const auto* p = std::get_if<Phase>(&box.payload);
  if (!p) throw UnsupportedBox("gate '" + box.name + "' needs a phase payload");
  return p->value.eval(params);
}

void check_no_phase(const Box& box) {
  if (!std::holds_alternative<std::monostate>(box.payload)) {
    throw UnsupportedBox("gate '" + box.name + "' takes no payload");
  }
}

}  // namespace

Box H() { return fixed_gate("H", 1); }
Box X() { return fixed_gate("X", 1); }
Box Y() { return fixed_gate("Y", 1); }
Box Z() { return fixed_gate("Z", 1); }
Box S() { return fixed_gate("S", 1); }
Box T() { return fixed_gate("T", 1); }
Box CX() { return fixed_gate("CX", 2); }
Box CZ() { return fixed_gate("CZ", 2); }
Box SWAP() { return swap_box(qubit[0], qubit[0]); }
Box Rz(const Expr& phase) { return phase_gate("Rz", 1, phase); }
Box Rx(const Expr& phase) { return phase_gate("Rx", 1, phase); }
Box CRz(const Expr& phase) { return phase_gate("CRz", 2, phase); }

Box custom_gate(const std::string& name, std::size_t n_qubits,
                std::vector<Complex> entries) {
  return Box{name, qubit.pow(n_qubits), qubit.pow(n_qubits), BoxKind::Gate,
             Entries{std::move(entries)}, false};
}

Box scalar(Complex coeff, const Expr& factor) {
  return Box{"scalar", Ty(), Ty(), BoxKind::Scalar, ScalarValue{coeff, factor}, false};
}

Box phase_scalar(const Expr& phase) {
  return Box{"phase", Ty(), Ty(), BoxKind::Scalar, Phase{phase}, false};
}

Box Ket(std::vector<int> bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) throw Error("Ket bits must be 0 or 1");
  }
  const std::size_t n = bits.size();
  return Box{"Ket", Ty(), qubit.pow(n), BoxKind::Ket, Bits{std::move(bits)}, false};
}

Box Bra(std::vector<int> bits) { return Ket(std::move(bits)).dagger(); }

Box Measure(const Ob& wire) {
  if (is_classical(wire)) throw Error("cannot measure classical wire " + wire.str());
  Ob out = wire.name == "qubit" ? bit[0] : Ob{"digit", wire.dim};
  return Box{"Measure", Ty{wire}, Ty{out}, BoxKind::Measure, {}, false};
}

Box Encode(const Ob& wire) {
  if (!is_classical(wire)) throw Error("cannot encode quantum wire " + wire.str());
  Ob out = wire.name == "bit" ? qubit[0] : Ob{"qudit", wire.dim};
  return Box{"Encode", Ty{wire}, Ty{out}, BoxKind::Encode, {}, false};
}

Box Discard(const Ty& x) {
  return Box{"Discard", x, Ty(), BoxKind::Discard, {}, false};
}

Box Controlled(const Box& gate) {
  if (gate.kind != BoxKind::Gate || gate.daggered) {
    throw UnsupportedBox("only undaggered gates can be classically controlled, got '" +
                         gate.label() + "'");
  }
  return Box{gate.name, bit * gate.dom, bit * gate.cod, BoxKind::Controlled,
             gate.payload, false};
}

Tensor gate_tensor(const Box& gate, const Params& params) {
  if (gate.daggered) return t_dagger(gate_tensor(gate.undaggered(), params));
  if (const auto* entries = std::get_if<Entries>(&gate.payload)) {
    std::vector<std::size_t> dom(gate.dom.size(), 2), cod(gate.cod.size(), 2);
    return Tensor(Dim(dom), Dim(cod), entries->values);
  }
  const std::string& n = gate.name;
  const double r = kInvSqrt2;
  if (n == "H") {
    check_no_phase(gate);
    return matrix(1, {r, r, r, -r});
  }
  if (n == "X") {
    check_no_phase(gate);
    return matrix(1, {0, 1, 1, 0});
  }
  if (n == "Y") {
    check_no_phase(gate);
    return matrix(1, {0, -kI, kI, 0});
  }
  if (n == "Z") {
    check_no_phase(gate);
    return matrix(1, {1, 0, 0, -1});
  }
  if (n == "S") {
    check_no_phase(gate);
    return matrix(1, {1, 0, 0, kI});
  }
  if (n == "T") {
    check_no_phase(gate);
    return matrix(1, {1, 0, 0, std::polar(1.0, pi / 4)});
  }
  if (n == "CX") {
    check_no_phase(gate);
    return matrix(2, {1, 0, 0, 0,  //
                      0, 1, 0, 0,  //
                      0, 0, 0, 1,  //
                      0, 0, 1, 0});
  }
  if (n == "CZ") {
    check_no_phase(gate);
    return matrix(2, {1, 0, 0, 0,  //
                      0, 1, 0, 0,  //
                      0, 0, 1, 0,  //
                      0, 0, 0, -1});
  }
  if (n == "Rz") {
    const double t = phase_of(gate, params);
    return matrix(1, {std::polar(1.0, -pi * t), 0, 0, std::polar(1.0, pi * t)});
  }
  if (n == "Rx") {
    const double t = phase_of(gate, params);
    const Complex c = std::cos(pi * t);
    const Complex s = -kI * std::sin(pi * t);
    return matrix(1, {c, s, s, c});
  }
  if (n == "CRz") {
    const double t = phase_of(gate, params);
    return matrix(2, {1, 0, 0, 0,  //
                      0, 1, 0, 0,  //
                      0, 0, std::polar(1.0, -pi * t), 0,
                      0, 0, 0, std::polar(1.0, pi * t)});
  }
  throw UnsupportedBox("unknown gate '" + n + "'");
}

Tensor ket_tensor(const std::vector<int>& bits) {
  std::size_t index = 0;
  for (int b : bits) index = 2 * index + static_cast<std::size_t>(b);
  std::vector<std::size_t> dims(bits.size(), 2);
  Tensor out = Tensor::zeros(Dim{}, Dim(dims));
  out(0, index) = 1.0;
  return out;
}

Complex scalar_value(const Box& box, const Params& params) {
  if (const auto* s = std::get_if<ScalarValue>(&box.payload)) {
    return s->coeff * s->factor.eval(params);
  }
  if (const auto* p = std::get_if<Phase>(&box.payload)) {
    return std::polar(1.0, pi * p->value.eval(params));
  }
  if (const auto* e = std::get_if<Entries>(&box.payload); e && e->values.size() == 1) {
    return e->values.front();
  }
  throw UnsupportedBox("scalar box '" + box.name + "' has no value");
}

TensorFunctor quantum_functor() {
  TensorFunctor f;
  f.set_ob("qubit", 2).set_ob("bit", 2);
  f.set_kind_rule(BoxKind::Gate, [](const Box& b, const Params& p) {
    return gate_tensor(b, p);
  });
  auto ket_rule = [](const Box& b, const Params&) {
    const auto* bits = std::get_if<Bits>(&b.payload);
    if (!bits) throw UnsupportedBox("ket without bits");
    return ket_tensor(bits->values);
  };
  f.set_kind_rule(BoxKind::Ket, ket_rule);
  f.set_kind_rule(BoxKind::Bra, [ket_rule](const Box& b, const Params& p) {
    return t_dagger(ket_rule(b, p));
  });
  f.set_kind_rule(BoxKind::Scalar, [](const Box& b, const Params& p) {
    return Tensor::scalar(scalar_value(b, p));
  });
  return f;
}

namespace {

std::optional<std::string> classical_wire(const Ty& ty) {
  for (const auto& ob : ty) {
    if (is_classical(ob)) return "wire '" + ob.str() + "'";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> find_mixed(const Diagram& c) {
  if (auto w = classical_wire(c.dom())) return w;
  for (const auto& layer : c.layers()) {
    if (const auto* box = std::get_if<Box>(&layer.node)) {
      switch (box->kind) {
        case BoxKind::Measure:
        case BoxKind::Encode:
        case BoxKind::Discard:
        case BoxKind::Controlled:
          return "box '" + box->label() + "'";
        default:
          break;
      }
    } else if (auto inner = find_mixed(*std::get<Bubble>(layer.node).inner)) {
      return inner;
    }
    if (auto w = classical_wire(layer.cod())) return w;
    if (auto w = classical_wire(layer.dom())) return w;
  }
  return classical_wire(c.cod());
}

bool is_mixed(const Diagram& c) { return find_mixed(c).has_value(); }

Tensor eval_pure(const Diagram& c, const Params& params) {
  if (auto culprit = find_mixed(c)) {
    throw SemanticsError("classical-quantum " + *culprit +
                         " has no pure semantics; use eval_channel");
  }
  static const TensorFunctor functor = quantum_functor();
  return functor(c, params);
}

Tensor eval_pure(const Sum& s, const Params& params) {
  Tensor total = Tensor::zeros(quantum_functor().ob(s.dom()),
                               quantum_functor().ob(s.cod()));
  for (const auto& term : s.terms()) total = t_add(total, eval_pure(term, params));
  return total;
}

Diagram iqp_ansatz(std::size_t n_qubits,
                   const std::vector<std::vector<Expr>>& params) {
  if (n_qubits < 2) throw Error("IQP ansatz needs at least two qubits");
  Diagram out = Diagram::id(qubit.pow(n_qubits));
  for (std::size_t layer = 0; layer < params.size(); ++layer) {
    if (params[layer].size() != n_qubits - 1) {
      throw Error("IQP layer " + std::to_string(layer) + " has " +
                  std::to_string(params[layer].size()) + " phases, expected " +
                  std::to_string(n_qubits - 1));
    }
    Diagram hadamards = Diagram::id(Ty());
    for (std::size_t i = 0; i < n_qubits; ++i) hadamards = hadamards * H();
    out = out >> hadamards;
    for (std::size_t i = 0; i + 1 < n_qubits; ++i) {
      out = out >> Diagram(CRz(params[layer][i]))
                       .whisker(qubit.pow(i), qubit.pow(n_qubits - i - 2));
    }
  }
  return out;
}

Diagram bell_state() {
  return Diagram(Ket(0, 0)) >> (Diagram(H()) * Id(qubit)) >> Diagram(CX());
}

Diagram teleportation() {
  const Diagram bell = bell_state();
  return (Diagram(Ket(1)) * bell) >> (bell.dagger() * Id(qubit));
}

}  // namespace wiregram

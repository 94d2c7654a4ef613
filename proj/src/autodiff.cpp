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

#include "wiregram/autodiff.hpp"

#include <numbers>

#include "wiregram/errors.hpp"
#include "wiregram/quantum.hpp"

namespace wiregram {

namespace {

using std::numbers::pi;
const Complex kMinusIPi{0.0, -pi};

Sum single(const Diagram& d) { return Sum(d); }

}  // namespace

Sum gate_grad(const Box& box, const std::string& variable) {
  if (!box.depends_on(variable)) return Sum(box.dom, box.cod);
  if (box.daggered) return gate_grad(box.undaggered(), variable).dagger();

  if (box.kind == BoxKind::Scalar) {
    if (const auto* s = std::get_if<ScalarValue>(&box.payload)) {
      return single(scalar(s->coeff, s->factor.diff(variable)));
    }
    const Expr& phase = std::get<Phase>(box.payload).value;
    // d e^{i pi f} = i pi f' e^{i pi f}
    return single(scalar(Complex(0.0, pi), phase.diff(variable)) * phase_scalar(phase));
  }
  const auto* gate_phase = std::get_if<Phase>(&box.payload);
  if (box.kind == BoxKind::Gate && gate_phase) {
    const Expr& phase = gate_phase->value;
    const Diagram coefficient = scalar(kMinusIPi, phase.diff(variable));
    if (box.name == "Rz") return single(coefficient * (Diagram(box) >> Z()));
    if (box.name == "Rx") return single(coefficient * (Diagram(box) >> X()));
    if (box.name == "CRz") {
      const Diagram projector = Diagram(Bra(1)) >> Ket(1);
      return single(coefficient * (Diagram(box) >> projector * Z()));
    }
  }
  throw UnsupportedBox("cannot differentiate box '" + box.label() + "' with respect to '" +
                       variable + "'");
}

Sum diagram_grad(const Diagram& d, const std::string& variable) {
  std::vector<Diagram> terms;
  const auto& layers = d.layers();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Layer& layer = layers[i];
    Sum local = std::visit(
        [&](const auto& node) -> Sum {
          using N = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<N, Box>) {
            return gate_grad(node, variable);
          } else {
            if (!node.depends_on(variable)) return Sum(node.dom(), node.cod());
            return bubble_grad(node, variable);
          }
        },
        layer.node);
    if (local.empty()) continue;
    const Diagram before(d.dom(), layer.dom(),
                         std::vector<Layer>(layers.begin(), layers.begin() + static_cast<std::ptrdiff_t>(i)));
    const Diagram after(layer.cod(), d.cod(),
                        std::vector<Layer>(layers.begin() + static_cast<std::ptrdiff_t>(i) + 1, layers.end()));
    for (const auto& term : local.terms()) {
      terms.push_back(before >> term.whisker(layer.left, layer.right) >> after);
    }
  }
  return Sum(d.dom(), d.cod(), std::move(terms));
}

Sum diagram_grad(const Sum& s, const std::string& variable) {
  Sum out(s.dom(), s.cod());
  for (const auto& term : s.terms()) out = out + diagram_grad(term, variable);
  return out;
}

Sum bubble_grad(const Bubble& bubble, const std::string& variable) {
  const Diagram& inner = *bubble.inner;
  if (!inner.dom().empty() || !inner.cod().empty()) {
    throw UnsupportedBox("chain rule needs a scalar diagram inside the '" +
                         std::string(scalar_fn_name(bubble.fn)) + "' bubble, got " +
                         inner.dom().str() + " -> " + inner.cod().str());
  }
  const Sum inner_grad = diagram_grad(inner, variable);
  if (inner_grad.empty()) return Sum(Ty(), Ty());

  Diagram outer_derivative = Diagram::id(Ty());
  switch (bubble.fn) {
    case ScalarFn::Exp:
      outer_derivative = Bubble(inner, ScalarFn::Exp);
      break;
    case ScalarFn::Sin:
      outer_derivative = Bubble(inner, ScalarFn::Cos);
      break;
    case ScalarFn::Cos:
      outer_derivative = Bubble(Diagram(Bubble(inner, ScalarFn::Sin)), ScalarFn::Neg);
      break;
    case ScalarFn::Square:
      outer_derivative = Diagram(scalar(2.0)) * inner;
      break;
    case ScalarFn::Neg:
      outer_derivative = scalar(-1.0);
      break;
  }
  return Sum(outer_derivative).tensor(inner_grad);
}

}  // namespace wiregram

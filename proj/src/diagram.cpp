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

#include "wiregram/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wiregram/errors.hpp"

namespace wiregram {

// ---------------------------------------------------------------- Ty

std::string Ob::str() const {
  return dim ? name + "[" + std::to_string(dim) + "]" : name;
}

Ty Ty::slice(std::size_t begin, std::size_t end) const {
  return Ty(std::vector<Ob>(objects_.begin() + static_cast<std::ptrdiff_t>(begin),
                            objects_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Ty Ty::pow(std::size_t n) const {
  std::vector<Ob> out;
  out.reserve(objects_.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.insert(out.end(), objects_.begin(), objects_.end());
  }
  return Ty(std::move(out));
}

std::string Ty::str() const {
  if (objects_.empty()) return "Ty()";
  std::string out;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (i) out += " @ ";
    out += objects_[i].str();
  }
  return out;
}

Ty operator*(const Ty& a, const Ty& b) {
  std::vector<Ob> out(a.objects_);
  out.insert(out.end(), b.objects_.begin(), b.objects_.end());
  return Ty(std::move(out));
}

bool is_classical(const Ob& ob) { return ob.name == "bit" || ob.name == "digit"; }

// ---------------------------------------------------------------- Box

std::string_view box_kind_name(BoxKind kind) {
  switch (kind) {
    case BoxKind::Gate:
      return "gate";
    case BoxKind::Spider:
      return "spider";
    case BoxKind::Scalar:
      return "scalar";
    case BoxKind::Ket:
      return "ket";
    case BoxKind::Bra:
      return "bra";
    case BoxKind::Measure:
      return "measure";
    case BoxKind::Encode:
      return "encode";
    case BoxKind::Discard:
      return "discard";
    case BoxKind::Swap:
      return "swap";
    case BoxKind::Controlled:
      return "controlled";
  }
  return "?";
}

BoxKind parse_box_kind(std::string_view name) {
  for (auto kind : {BoxKind::Gate, BoxKind::Spider, BoxKind::Scalar, BoxKind::Ket,
                    BoxKind::Bra, BoxKind::Measure, BoxKind::Encode,
                    BoxKind::Discard, BoxKind::Swap, BoxKind::Controlled}) {
    if (box_kind_name(kind) == name) return kind;
  }
  throw Error("unknown box kind '" + std::string(name) + "'");
}

Box Box::dagger() const {
  Box out = *this;
  std::swap(out.dom, out.cod);
  switch (kind) {
    case BoxKind::Ket:
      out.kind = BoxKind::Bra;
      out.name = "Bra";
      break;
    case BoxKind::Bra:
      out.kind = BoxKind::Ket;
      out.name = "Ket";
      break;
    case BoxKind::Swap:
      break;
    default:
      out.daggered = !daggered;
  }
  return out;
}

const Expr* Box::phase() const {
  if (const auto* p = std::get_if<Phase>(&payload)) return &p->value;
  if (const auto* s = std::get_if<ScalarValue>(&payload)) return &s->factor;
  return nullptr;
}

bool Box::depends_on(const std::string& variable) const {
  const Expr* e = phase();
  return e && e->depends_on(variable);
}

std::set<std::string> Box::free_vars() const {
  const Expr* e = phase();
  return e ? e->free_vars() : std::set<std::string>{};
}

namespace {

std::string format_complex(Complex c) {
  std::ostringstream out;
  if (c.imag() == 0.0) {
    out << c.real();
  } else if (c.real() == 0.0) {
    out << c.imag() << "i";
  } else {
    out << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  }
  return out.str();
}

}  // namespace

std::string Box::label() const {
  std::string out = name;
  if (const auto* p = std::get_if<Phase>(&payload)) {
    out += "(" + p->value.str() + ")";
  } else if (const auto* b = std::get_if<Bits>(&payload)) {
    out += "(";
    for (std::size_t i = 0; i < b->values.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(b->values[i]);
    }
    out += ")";
  } else if (const auto* s = std::get_if<ScalarValue>(&payload)) {
    if (s->factor == Expr(1.0)) {
      out = format_complex(s->coeff);
    } else if (s->coeff == Complex(1.0)) {
      out = s->factor.str();
    } else {
      out = format_complex(s->coeff) + "*" + s->factor.str();
    }
  }
  if (daggered) out += "†";
  return out;
}

// ---------------------------------------------------------------- Bubble

Bubble::Bubble(Diagram inner_diagram, ScalarFn function)
    : inner(std::make_shared<const Diagram>(std::move(inner_diagram))),
      fn(function) {}

const Ty& Bubble::dom() const { return inner->dom(); }
const Ty& Bubble::cod() const { return inner->cod(); }

// Every catalog function has real Taylor coefficients, so it commutes with
// entry-wise conjugation and the dagger can move inside.
Bubble Bubble::dagger() const { return Bubble(inner->dagger(), fn); }

bool Bubble::depends_on(const std::string& variable) const {
  for (const auto& layer : inner->layers()) {
    const bool hit = std::visit(
        [&](const auto& node) { return node.depends_on(variable); }, layer.node);
    if (hit) return true;
  }
  return false;
}

bool operator==(const Bubble& a, const Bubble& b) {
  return a.fn == b.fn && (a.inner == b.inner || *a.inner == *b.inner);
}

const Ty& node_dom(const Node& node) {
  if (const auto* box = std::get_if<Box>(&node)) return box->dom;
  return std::get<Bubble>(node).dom();
}

const Ty& node_cod(const Node& node) {
  if (const auto* box = std::get_if<Box>(&node)) return box->cod;
  return std::get<Bubble>(node).cod();
}

std::string node_label(const Node& node) {
  if (const auto* box = std::get_if<Box>(&node)) return box->label();
  return std::string(scalar_fn_name(std::get<Bubble>(node).fn));
}

// ---------------------------------------------------------------- Diagram

Diagram::Diagram(Ty dom, Ty cod, std::vector<Layer> layers)
    : dom_(std::move(dom)), cod_(std::move(cod)), layers_(std::move(layers)) {}

Diagram::Diagram(const Box& box)
    : dom_(box.dom), cod_(box.cod), layers_{Layer{Ty(), box, Ty()}} {}

Diagram::Diagram(const Bubble& bubble)
    : dom_(bubble.dom()), cod_(bubble.cod()), layers_{Layer{Ty(), bubble, Ty()}} {}

Diagram Diagram::then(const Diagram& other) const {
  if (cod_ != other.dom_) {
    throw BoundaryMismatch("cannot compose: codomain " + cod_.str() +
                           " does not match domain " + other.dom_.str());
  }
  std::vector<Layer> layers(layers_);
  layers.insert(layers.end(), other.layers_.begin(), other.layers_.end());
  return Diagram(dom_, other.cod_, std::move(layers));
}

Diagram Diagram::whisker(const Ty& left, const Ty& right) const {
  std::vector<Layer> layers;
  layers.reserve(layers_.size());
  for (const auto& layer : layers_) {
    layers.push_back(Layer{left * layer.left, layer.node, layer.right * right});
  }
  return Diagram(left * dom_ * right, left * cod_ * right, std::move(layers));
}

Diagram Diagram::tensor(const Diagram& other) const {
  std::vector<Layer> layers;
  layers.reserve(layers_.size() + other.layers_.size());
  for (const auto& layer : layers_) {
    layers.push_back(Layer{layer.left, layer.node, layer.right * other.dom_});
  }
  for (const auto& layer : other.layers_) {
    layers.push_back(Layer{cod_ * layer.left, layer.node, layer.right});
  }
  return Diagram(dom_ * other.dom_, cod_ * other.cod_, std::move(layers));
}

Diagram Diagram::dagger() const {
  std::vector<Layer> layers;
  layers.reserve(layers_.size());
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    Node node = std::visit([](const auto& n) -> Node { return n.dagger(); }, it->node);
    layers.push_back(Layer{it->left, std::move(node), it->right});
  }
  return Diagram(cod_, dom_, std::move(layers));
}

Box swap_box(const Ob& left, const Ob& right) {
  return Box{"SWAP", Ty{left, right}, Ty{right, left}, BoxKind::Swap, {}, false};
}

Diagram permutation(const Ty& x, std::span<const std::size_t> order) {
  if (order.size() != x.size()) {
    throw Error("permutation of " + std::to_string(order.size()) +
                " wires applied to " + x.str());
  }
  // Bubble sort on the target positions: current[k] is the original index
  // of the wire at position k.
  std::vector<std::size_t> target(x.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= x.size()) throw Error("permutation index out of range");
    target[order[k]] = k;
  }
  std::vector<std::size_t> current(x.size());
  std::iota(current.begin(), current.end(), 0);
  Diagram out = Diagram::id(x);
  std::vector<Ob> wires(x.begin(), x.end());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < current.size(); ++k) {
      if (target[current[k]] > target[current[k + 1]]) {
        Ty left(std::vector<Ob>(wires.begin(), wires.begin() + static_cast<std::ptrdiff_t>(k)));
        Ty right(std::vector<Ob>(wires.begin() + static_cast<std::ptrdiff_t>(k) + 2, wires.end()));
        out = out.then(Diagram(swap_box(wires[k], wires[k + 1])).whisker(left, right));
        std::swap(wires[k], wires[k + 1]);
        std::swap(current[k], current[k + 1]);
        swapped = true;
      }
    }
  }
  return out;
}

Diagram swap(const Ty& x, const Ty& y) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < y.size(); ++i) order.push_back(x.size() + i);
  for (std::size_t i = 0; i < x.size(); ++i) order.push_back(i);
  return permutation(x * y, order);
}

TypeCheck well_typed(const Diagram& d) {
  Ty current = d.dom();
  const auto& layers = d.layers();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Ty dom = layers[i].dom();
    if (dom != current) {
      return {false, i,
              "layer " + std::to_string(i) + " expects " + dom.str() +
                  " but receives " + current.str()};
    }
    if (const auto* bubble = std::get_if<Bubble>(&layers[i].node)) {
      auto inner = well_typed(*bubble->inner);
      if (!inner) {
        return {false, i, "layer " + std::to_string(i) + " bubble: " + inner.message};
      }
    }
    current = layers[i].cod();
  }
  if (current != d.cod()) {
    return {false, layers.size(),
            "diagram codomain " + d.cod().str() + " does not match output " +
                current.str()};
  }
  return {};
}

// ---------------------------------------------------------------- Sum

Sum::Sum(Ty dom, Ty cod, std::vector<Diagram> terms)
    : dom_(std::move(dom)), cod_(std::move(cod)), terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    if (term.dom() != dom_ || term.cod() != cod_) {
      throw BoundaryMismatch("sum term " + term.dom().str() + " -> " +
                             term.cod().str() + " does not match " + dom_.str() +
                             " -> " + cod_.str());
    }
  }
}

Sum::Sum(const Diagram& term) : dom_(term.dom()), cod_(term.cod()), terms_{term} {}

Sum Sum::then(const Sum& other) const {
  if (cod_ != other.dom_) {
    throw BoundaryMismatch("cannot compose: codomain " + cod_.str() +
                           " does not match domain " + other.dom_.str());
  }
  std::vector<Diagram> terms;
  for (const auto& f : terms_) {
    for (const auto& g : other.terms_) terms.push_back(f.then(g));
  }
  return Sum(dom_, other.cod_, std::move(terms));
}

Sum Sum::tensor(const Sum& other) const {
  std::vector<Diagram> terms;
  for (const auto& f : terms_) {
    for (const auto& g : other.terms_) terms.push_back(f.tensor(g));
  }
  return Sum(dom_ * other.dom_, cod_ * other.cod_, std::move(terms));
}

Sum Sum::dagger() const {
  std::vector<Diagram> terms;
  for (const auto& f : terms_) terms.push_back(f.dagger());
  return Sum(cod_, dom_, std::move(terms));
}

Sum operator+(const Sum& a, const Sum& b) {
  std::vector<Diagram> terms(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Sum(a.dom_, a.cod_, std::move(terms));
}

}  // namespace wiregram

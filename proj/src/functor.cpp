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

#include "wiregram/functor.hpp"

#include "wiregram/errors.hpp"

namespace wiregram {

BoxSignature BoxSignature::of(const Box& box) {
  return {box.name, box.dom, box.cod, box.kind, box.payload.index()};
}

TensorFunctor& TensorFunctor::set_ob(const std::string& label, std::size_t dim) {
  if (dim == 0) throw Error("object '" + label + "' mapped to dimension 0");
  ob_[label] = dim;
  return *this;
}

TensorFunctor& TensorFunctor::set_ar(const Box& box, Tensor image) {
  return set_ar(BoxSignature::of(box),
                [image = std::move(image)](const Box&, const Params&) { return image; });
}

TensorFunctor& TensorFunctor::set_ar(BoxSignature signature, TensorRule rule) {
  ar_[std::move(signature)] = std::move(rule);
  return *this;
}

TensorFunctor& TensorFunctor::set_kind_rule(BoxKind kind, TensorRule rule) {
  kind_rules_[kind] = std::move(rule);
  return *this;
}

std::size_t TensorFunctor::ob(const Ob& ob) const {
  if (auto it = ob_.find(ob.name); it != ob_.end()) return it->second;
  if (ob.dim > 0) return ob.dim;
  throw MissingRule("no dimension for object '" + ob.str() + "'");
}

Dim TensorFunctor::ob(const Ty& ty) const {
  std::vector<std::size_t> dims;
  dims.reserve(ty.size());
  for (const auto& o : ty) dims.push_back(ob(o));
  return Dim(std::move(dims));
}

Tensor swap_tensor(std::size_t a, std::size_t b) {
  Tensor out = Tensor::zeros(Dim{a, b}, Dim{b, a});
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) out(i * b + j, j * a + i) = 1.0;
  }
  return out;
}

Tensor TensorFunctor::box_image(const Box& box, const Params& params) const {
  if (box.daggered) return t_dagger(box_image(box.undaggered(), params));
  Tensor image;
  if (box.kind == BoxKind::Swap) {
    if (box.dom.size() != 2) throw Error("swap box must have two wires");
    image = swap_tensor(ob(box.dom[0]), ob(box.dom[1]));
  } else if (auto it = ar_.find(BoxSignature::of(box)); it != ar_.end()) {
    image = it->second(box, params);
  } else if (auto kt = kind_rules_.find(box.kind); kt != kind_rules_.end()) {
    image = kt->second(box, params);
  } else {
    throw MissingRule("no rule for box '" + box.label() + "' of kind " +
                      std::string(box_kind_name(box.kind)));
  }
  const Dim dom = ob(box.dom);
  const Dim cod = ob(box.cod);
  if (image.dom() != dom || image.cod() != cod) {
    throw DimensionMismatch("image of box '" + box.label() + "' is " +
                            image.dom().str() + " -> " + image.cod().str() +
                            ", expected " + dom.str() + " -> " + cod.str());
  }
  return image;
}

Tensor TensorFunctor::node_image(const Node& node, const Params& params) const {
  if (const auto* box = std::get_if<Box>(&node)) return box_image(*box, params);
  const auto& bubble = std::get<Bubble>(node);
  return t_map((*this)(*bubble.inner, params), bubble.fn);
}

Tensor TensorFunctor::operator()(const Diagram& d, const Params& params) const {
  Tensor acc = Tensor::identity(ob(d.dom()));
  for (const auto& layer : d.layers()) {
    const Tensor image = node_image(layer.node, params);
    acc = apply_layer(acc, ob(layer.left).size(), image, ob(layer.right).size(),
                      ob(layer.cod()));
  }
  if (acc.cod() != ob(d.cod())) {
    throw DimensionMismatch("diagram output " + acc.cod().str() +
                            " does not match codomain " + ob(d.cod()).str());
  }
  return acc;
}

Tensor TensorFunctor::operator()(const Sum& s, const Params& params) const {
  Tensor total = Tensor::zeros(ob(s.dom()), ob(s.cod()));
  for (const auto& term : s.terms()) total = t_add(total, (*this)(term, params));
  return total;
}

Ty DiagramFunctor::ob(const Ty& ty) const {
  Ty out;
  for (const auto& o : ty) out = out * ob_(o);
  return out;
}

Diagram DiagramFunctor::operator()(const Diagram& d) const {
  std::vector<Layer> layers;
  for (const auto& layer : d.layers()) {
    Diagram image = std::visit(
        [&](const auto& node) -> Diagram {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Box>) {
            if (node.daggered) return ar_(node.undaggered()).dagger();
            return ar_(node);
          } else {
            return Diagram(Bubble((*this)(*node.inner), node.fn));
          }
        },
        layer.node);
    const Ty dom = ob(node_dom(layer.node));
    const Ty cod = ob(node_cod(layer.node));
    if (image.dom() != dom || image.cod() != cod) {
      throw BoundaryMismatch("image of '" + node_label(layer.node) + "' is " +
                             image.dom().str() + " -> " + image.cod().str() +
                             ", expected " + dom.str() + " -> " + cod.str());
    }
    const auto whiskered = image.whisker(ob(layer.left), ob(layer.right));
    layers.insert(layers.end(), whiskered.layers().begin(), whiskered.layers().end());
  }
  return Diagram(ob(d.dom()), ob(d.cod()), std::move(layers));
}

Sum DiagramFunctor::operator()(const Sum& s) const {
  std::vector<Diagram> terms;
  for (const auto& term : s.terms()) terms.push_back((*this)(term));
  return Sum(ob(s.dom()), ob(s.cod()), std::move(terms));
}

}  // namespace wiregram

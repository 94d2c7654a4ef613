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

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "wiregram/diagram.hpp"
#include "wiregram/tensor.hpp"

namespace wiregram {

/// Key of an arrow rule: two boxes share an image only when their name,
/// boundaries and payload kind all agree.
struct BoxSignature {
  std::string name;
  Ty dom;
  Ty cod;
  BoxKind kind = BoxKind::Gate;
  std::size_t payload_index = 0;

  static BoxSignature of(const Box& box);
  friend auto operator<=>(const BoxSignature&, const BoxSignature&) = default;
  friend bool operator==(const BoxSignature&, const BoxSignature&) = default;
};

/// Produces the image of an undaggered box.
using TensorRule = std::function<Tensor(const Box&, const Params&)>;

/// Interprets wires as dimensions and boxes as tensors; applying it to a
/// diagram contracts the box images layer by layer.
///
/// Object lookup tries the label map first and falls back to the label's
/// dimension hint. Arrow lookup tries exact signatures, then the rule
/// registered for the box's kind. Swap boxes always map to the wire
/// transposition. A daggered box maps to the conjugate transpose of its
/// undaggered image.
class TensorFunctor {
 public:
  TensorFunctor() = default;

  TensorFunctor& set_ob(const std::string& label, std::size_t dim);
  TensorFunctor& set_ar(const Box& box, Tensor image);
  TensorFunctor& set_ar(BoxSignature signature, TensorRule rule);
  TensorFunctor& set_kind_rule(BoxKind kind, TensorRule rule);

  std::size_t ob(const Ob& ob) const;
  Dim ob(const Ty& ty) const;
  /// Image of a single box, with the boundary coherence check.
  Tensor box_image(const Box& box, const Params& params = {}) const;
  Tensor node_image(const Node& node, const Params& params = {}) const;

  Tensor operator()(const Diagram& d, const Params& params = {}) const;
  Tensor operator()(const Sum& s, const Params& params = {}) const;

 private:
  std::map<std::string, std::size_t> ob_;
  std::map<BoxSignature, TensorRule> ar_;
  std::map<BoxKind, TensorRule> kind_rules_;
};

inline Tensor apply(const TensorFunctor& functor, const Diagram& d,
                    const Params& params = {}) {
  return functor(d, params);
}
inline Tensor apply(const TensorFunctor& functor, const Sum& s,
                    const Params& params = {}) {
  return functor(s, params);
}

/// Permutation tensor of the elementary swap on wires of dimension a, b.
Tensor swap_tensor(std::size_t a, std::size_t b);

/// Substitutes boxes by diagrams. Wires map to types and every box of the
/// source must have an image with matching boundaries.
class DiagramFunctor {
 public:
  using ObRule = std::function<Ty(const Ob&)>;
  using ArRule = std::function<Diagram(const Box&)>;

  DiagramFunctor(ObRule ob, ArRule ar) : ob_(std::move(ob)), ar_(std::move(ar)) {}

  Ty ob(const Ty& ty) const;
  Diagram operator()(const Diagram& d) const;
  Sum operator()(const Sum& s) const;

 private:
  ObRule ob_;
  ArRule ar_;
};

}  // namespace wiregram

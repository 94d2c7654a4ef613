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
#include <utility>
#include <vector>

#include "wiregram/diagram.hpp"
#include "wiregram/functor.hpp"

namespace wiregram::zx {

enum class Color { Z, X };

/// Spider with `legs_in` inputs and `legs_out` outputs. The phase is in
/// half-turns.
Box spider(Color color, std::size_t legs_in, std::size_t legs_out,
           const Expr& phase = Expr(0.0));
inline Box Z(std::size_t legs_in, std::size_t legs_out, const Expr& phase = Expr(0.0)) {
  return spider(Color::Z, legs_in, legs_out, phase);
}
inline Box X(std::size_t legs_in, std::size_t legs_out, const Expr& phase = Expr(0.0)) {
  return spider(Color::X, legs_in, legs_out, phase);
}
bool is_spider(const Box& box);
Color spider_color(const Box& box);

/// Z: 1 on the all-zero index, e^{i pi phase} on the all-one index.
/// X: the Z tensor with a Hadamard on every leg.
Tensor spider_tensor(const Box& box, const Params& params = {});

/// The quantum functor extended with spider images.
TensorFunctor functor();
Tensor eval(const Diagram& d, const Params& params = {});

/// Translates a circuit into spiders, Hadamards, swaps and scalars. The
/// image evaluates exactly to the circuit, scalars included. Throws
/// UnsupportedBox for boxes outside the translatable gate set.
Diagram circuit2zx(const Diagram& circuit);

enum class NodeKind { Input, Output, Z, X, H };

std::string_view node_kind_name(NodeKind kind);

struct Node {
  int id = 0;
  NodeKind kind = NodeKind::Z;
  /// Half-turns; absent on boundaries and Hadamards.
  std::optional<double> phase;
  friend bool operator==(const Node&, const Node&) = default;
};

/// Undirected multigraph of spiders, Hadamards and boundaries, with a global
/// scalar factor so that conversions are exact.
struct Graph {
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> inputs;
  std::vector<int> outputs;
  Complex scalar{1.0};

  const Node* find(int id) const;
  std::size_t degree(int id) const;
  std::size_t spider_count() const;
  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Throws GraphError naming the first violated invariant.
void validate(const Graph& g);

/// Throws UnsupportedBox for non-ZX boxes and UnboundVariable for symbolic
/// phases not covered by `params`.
Graph to_graph(const Diagram& d, const Params& params = {});
/// Rebuilds a diagram, inserting swaps where the wire order requires them.
Diagram from_graph(const Graph& g);
/// Merges adjacent spiders of the same color until none are left.
Graph fuse_spiders(const Graph& g);

std::string graph_to_json(const Graph& g);
/// Throws SchemaError or GraphError.
Graph graph_from_json(std::string_view text);

}  // namespace wiregram::zx

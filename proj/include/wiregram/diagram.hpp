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

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wiregram/expr.hpp"
#include "wiregram/tensor.hpp"
#include "wiregram/ty.hpp"

namespace wiregram {

enum class BoxKind {
  Gate,
  Spider,
  Scalar,
  Ket,
  Bra,
  Measure,
  Encode,
  Discard,
  Swap,
  Controlled,
};

std::string_view box_kind_name(BoxKind kind);
/// Throws Error on unknown names. "bubble" is not a box kind.
BoxKind parse_box_kind(std::string_view name);

/// Phase in half-turns.
struct Phase {
  Expr value;
  friend bool operator==(const Phase&, const Phase&) = default;
};

/// Explicit tensor entries in the library's row-major layout.
struct Entries {
  std::vector<Complex> values;
  friend bool operator==(const Entries&, const Entries&) = default;
};

struct Bits {
  std::vector<int> values;
  friend bool operator==(const Bits&, const Bits&) = default;
};

/// The scalar `coeff * factor`.
struct ScalarValue {
  Complex coeff{1.0};
  Expr factor{1.0};
  friend bool operator==(const ScalarValue&, const ScalarValue&) = default;
};

using Payload = std::variant<std::monostate, Phase, Entries, Bits, ScalarValue>;

struct Box {
  std::string name;
  Ty dom;
  Ty cod;
  BoxKind kind = BoxKind::Gate;
  Payload payload;
  bool daggered = false;

  /// Kets and bras dagger into each other and swaps into the reverse swap;
  /// every other box swaps its boundaries and toggles `daggered`.
  Box dagger() const;
  /// The box with `daggered` cleared and boundaries restored.
  Box undaggered() const { return daggered ? dagger() : *this; }
  /// Phase expression, or nullptr when the payload carries none.
  const Expr* phase() const;
  bool depends_on(const std::string& variable) const;
  std::set<std::string> free_vars() const;
  std::string label() const;

  friend bool operator==(const Box&, const Box&) = default;
};

class Diagram;

/// A scalar function applied entry-wise to the evaluation of `inner`.
struct Bubble {
  std::shared_ptr<const Diagram> inner;
  ScalarFn fn = ScalarFn::Exp;

  Bubble(Diagram inner, ScalarFn fn);
  const Ty& dom() const;
  const Ty& cod() const;
  Bubble dagger() const;
  bool depends_on(const std::string& variable) const;

  friend bool operator==(const Bubble& a, const Bubble& b);
};

using Node = std::variant<Box, Bubble>;

const Ty& node_dom(const Node& node);
const Ty& node_cod(const Node& node);
std::string node_label(const Node& node);

struct Layer {
  Ty left;
  Node node;
  Ty right;

  Ty dom() const { return left * node_dom(node) * right; }
  Ty cod() const { return left * node_cod(node) * right; }
  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Outcome of a well-typedness check. `layer` is the index of the first
/// layer whose domain does not match what precedes it (the layer count when
/// the mismatch is against the diagram's codomain).
struct TypeCheck {
  bool ok = true;
  std::size_t layer = 0;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// A string diagram as a sequence of whiskered boxes. Values are immutable;
/// composition returns new diagrams.
class Diagram {
 public:
  /// Builds a diagram from raw layers without checking it; see well_typed.
  Diagram(Ty dom, Ty cod, std::vector<Layer> layers);
  Diagram(const Box& box);        // NOLINT(google-explicit-constructor)
  Diagram(const Bubble& bubble);  // NOLINT(google-explicit-constructor)

  static Diagram id(const Ty& x) { return Diagram(x, x, {}); }

  const Ty& dom() const { return dom_; }
  const Ty& cod() const { return cod_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t size() const { return layers_.size(); }

  /// Throws BoundaryMismatch unless `cod() == other.dom()`.
  Diagram then(const Diagram& other) const;
  Diagram tensor(const Diagram& other) const;
  Diagram dagger() const;
  /// `left @ *this @ right`.
  Diagram whisker(const Ty& left, const Ty& right) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Ty dom_;
  Ty cod_;
  std::vector<Layer> layers_;
};

inline Diagram operator>>(const Diagram& f, const Diagram& g) { return f.then(g); }
inline Diagram operator*(const Diagram& f, const Diagram& g) { return f.tensor(g); }

inline Diagram identity(const Ty& x) { return Diagram::id(x); }
inline Diagram Id(const Ty& x) { return Diagram::id(x); }
inline Diagram then(const Diagram& f, const Diagram& g) { return f.then(g); }
inline Diagram tensor(const Diagram& f, const Diagram& g) { return f.tensor(g); }
inline Diagram dagger(const Diagram& d) { return d.dagger(); }

/// The elementary swap of two single wires.
Box swap_box(const Ob& left, const Ob& right);
/// Diagram from `x @ y` to `y @ x` made of |x|·|y| elementary swaps.
Diagram swap(const Ty& x, const Ty& y);
/// Diagram from `x` to the reordering whose wire k is `x[order[k]]`,
/// made of adjacent elementary swaps.
Diagram permutation(const Ty& x, std::span<const std::size_t> order);

TypeCheck well_typed(const Diagram& d);

/// Formal sum of parallel diagrams. The empty sum is the zero map.
class Sum {
 public:
  Sum(Ty dom, Ty cod, std::vector<Diagram> terms = {});
  Sum(const Diagram& term);  // NOLINT(google-explicit-constructor)

  const Ty& dom() const { return dom_; }
  const Ty& cod() const { return cod_; }
  const std::vector<Diagram>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Sum then(const Sum& other) const;
  Sum tensor(const Sum& other) const;
  Sum dagger() const;

  friend Sum operator+(const Sum& a, const Sum& b);
  friend bool operator==(const Sum&, const Sum&) = default;

 private:
  Ty dom_;
  Ty cod_;
  std::vector<Diagram> terms_;
};

}  // namespace wiregram

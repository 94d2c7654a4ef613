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

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace wiregram {

/// Assignment of real values to variable names.
using Params = std::map<std::string, double>;

/// Immutable real-valued symbolic expression over constants, variables,
/// sums, products and negation.
///
/// Constructors fold constants and drop neutral elements, so `x * 1`,
/// `x + 0` and `-(-x)` come back as `x`. Equality is structural on the
/// folded tree.
class Expr {
 public:
  enum class Op { Const, Var, Add, Mul, Neg };

  Expr(double value = 0.0);  // NOLINT(google-explicit-constructor)
  static Expr var(std::string name);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);

  Op op() const;
  /// Value of a constant node. Only meaningful when `op() == Op::Const`.
  double value() const;
  /// Name of a variable node. Only meaningful when `op() == Op::Var`.
  const std::string& name() const;
  std::span<const Expr> args() const;

  bool is_constant() const { return op() == Op::Const; }
  bool depends_on(const std::string& variable) const;
  std::set<std::string> free_vars() const;

  /// Throws UnboundVariable when a variable has no value in `params`.
  double eval(const Params& params = {}) const;

  /// Symbolic partial derivative by linearity and the product rule.
  Expr diff(const std::string& variable) const;

  std::string str() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr operator-(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

inline Expr expr_diff(const Expr& e, const std::string& variable) {
  return e.diff(variable);
}

}  // namespace wiregram

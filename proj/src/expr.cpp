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

#include "wiregram/expr.hpp"

#include <sstream>

#include "wiregram/errors.hpp"

namespace wiregram {

struct Expr::Node {
  Op op = Op::Const;
  double value = 0.0;
  std::string name;
  std::vector<Expr> args;
};

Expr::Expr(double value) {
  auto node = std::make_shared<Node>();
  node->value = value;
  node_ = std::move(node);
}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->op = Op::Var;
  node->name = std::move(name);
  return Expr(std::move(node));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> kept;
  double constant = 0.0;
  for (const auto& term : terms) {
    if (term.op() == Op::Add) {
      for (const auto& inner : term.args()) {
        if (inner.is_constant()) {
          constant += inner.value();
        } else {
          kept.push_back(inner);
        }
      }
    } else if (term.is_constant()) {
      constant += term.value();
    } else {
      kept.push_back(term);
    }
  }
  if (constant != 0.0) kept.emplace_back(constant);
  if (kept.empty()) return Expr(0.0);
  if (kept.size() == 1) return kept.front();
  auto node = std::make_shared<Node>();
  node->op = Op::Add;
  node->args = std::move(kept);
  return Expr(std::move(node));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> kept;
  double constant = 1.0;
  for (const auto& factor : factors) {
    if (factor.op() == Op::Mul) {
      for (const auto& inner : factor.args()) {
        if (inner.is_constant()) {
          constant *= inner.value();
        } else {
          kept.push_back(inner);
        }
      }
    } else if (factor.is_constant()) {
      constant *= factor.value();
    } else {
      kept.push_back(factor);
    }
  }
  if (constant == 0.0 || kept.empty()) return Expr(constant);
  if (constant != 1.0) kept.insert(kept.begin(), Expr(constant));
  if (kept.size() == 1) return kept.front();
  auto node = std::make_shared<Node>();
  node->op = Op::Mul;
  node->args = std::move(kept);
  return Expr(std::move(node));
}

Expr::Op Expr::op() const { return node_->op; }
double Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
std::span<const Expr> Expr::args() const { return node_->args; }

bool Expr::depends_on(const std::string& variable) const {
  switch (op()) {
    case Op::Const:
      return false;
    case Op::Var:
      return name() == variable;
    default:
      for (const auto& arg : args()) {
        if (arg.depends_on(variable)) return true;
      }
      return false;
  }
}

std::set<std::string> Expr::free_vars() const {
  std::set<std::string> out;
  if (op() == Op::Var) {
    out.insert(name());
    return out;
  }
  for (const auto& arg : args()) {
    auto inner = arg.free_vars();
    out.insert(inner.begin(), inner.end());
  }
  return out;
}

double Expr::eval(const Params& params) const {
  switch (op()) {
    case Op::Const:
      return value();
    case Op::Var: {
      auto it = params.find(name());
      if (it == params.end()) throw UnboundVariable(name());
      return it->second;
    }
    case Op::Add: {
      double total = 0.0;
      for (const auto& arg : args()) total += arg.eval(params);
      return total;
    }
    case Op::Mul: {
      double total = 1.0;
      for (const auto& arg : args()) total *= arg.eval(params);
      return total;
    }
    case Op::Neg:
      return -args()[0].eval(params);
  }
  return 0.0;
}

Expr Expr::diff(const std::string& variable) const {
  if (!depends_on(variable)) return Expr(0.0);
  switch (op()) {
    case Op::Const:
      return Expr(0.0);
    case Op::Var:
      return Expr(1.0);
    case Op::Add: {
      std::vector<Expr> terms;
      for (const auto& arg : args()) terms.push_back(arg.diff(variable));
      return sum(std::move(terms));
    }
    case Op::Mul: {
      std::vector<Expr> terms;
      auto factors = args();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i].depends_on(variable)) continue;
        std::vector<Expr> product_terms(factors.begin(), factors.end());
        product_terms[i] = factors[i].diff(variable);
        terms.push_back(product(std::move(product_terms)));
      }
      return sum(std::move(terms));
    }
    case Op::Neg:
      return -args()[0].diff(variable);
  }
  return Expr(0.0);
}

std::string Expr::str() const {
  std::ostringstream out;
  switch (op()) {
    case Op::Const:
      out << value();
      break;
    case Op::Var:
      out << name();
      break;
    case Op::Add:
    case Op::Mul: {
      const char* sep = op() == Op::Add ? " + " : " * ";
      out << '(';
      for (std::size_t i = 0; i < args().size(); ++i) {
        if (i) out << sep;
        out << args()[i].str();
      }
      out << ')';
      break;
    }
    case Op::Neg:
      out << "-" << args()[0].str();
      break;
  }
  return out.str();
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Expr::Op::Const:
      return a.value() == b.value();
    case Expr::Op::Var:
      return a.name() == b.name();
    default: {
      auto xs = a.args();
      auto ys = b.args();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] == ys[i])) return false;
      }
      return true;
    }
  }
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr(-a.value());
  if (a.op() == Expr::Op::Neg) return a.args()[0];
  auto node = std::make_shared<Expr::Node>();
  node->op = Expr::Op::Neg;
  node->args = {a};
  return Expr(std::move(node));
}

}  // namespace wiregram

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

// Random well-typed documents covering every box kind, payload variant,
// bubbles, symbolic expressions and formal sums.

#include "support.hpp"
#include "wiregram/serialize.hpp"
#include "wiregram/zx.hpp"

namespace testing {

inline wiregram::Expr random_expr(Rng& rng, int depth = 2) {
  using wiregram::Expr;
  if (depth == 0 || rng.coin(0.4)) {
    if (rng.coin(0.5)) return Expr(std::round(rng.uniform(-4.0, 4.0) * 1000.0) / 1000.0);
    static const char* names[] = {"a", "b", "theta"};
    return Expr::var(names[rng.index(3)]);
  }
  const Expr x = random_expr(rng, depth - 1), y = random_expr(rng, depth - 1);
  switch (rng.index(3)) {
    case 0: return x + y;
    case 1: return x * y;
    default: return -x;
  }
}

inline wiregram::Diagram random_layer(Rng& rng, const wiregram::Ty& cur) {
  using namespace wiregram;
  const std::size_t n = cur.size();
  // Collect the single-qubit positions.
  std::vector<std::size_t> qpos;
  for (std::size_t i = 0; i < n; ++i)
    if (cur[i].name == "qubit") qpos.push_back(i);
  auto at = [&](std::size_t pos, std::size_t width, const Diagram& d) {
    return d.whisker(cur.slice(0, pos), cur.slice(pos + width, n));
  };
  switch (rng.index(12)) {
    case 0:
      if (!qpos.empty()) {
        const Box g = rng.coin() ? Rz(random_expr(rng)) : Rx(random_expr(rng));
        return at(qpos[rng.index(qpos.size())], 1, rng.coin(0.3) ? Diagram(g.dagger()) : Diagram(g));
      }
      break;
    case 1:
      if (!qpos.empty()) {
        static const std::function<Box()> gates[] = {H, X, Y, Z, S, T};
        return at(qpos[rng.index(qpos.size())], 1, Diagram(gates[rng.index(6)]()));
      }
      break;
    case 2:
      return at(rng.index(n + 1), 0, Diagram(scalar(Complex(rng.uniform(), rng.uniform()),
                                                  random_expr(rng))));
    case 3: {
      std::vector<int> bits;
      for (std::size_t k = 0; k <= rng.index(2); ++k) bits.push_back(static_cast<int>(rng.index(2)));
      return at(rng.index(n + 1), 0, Diagram(Ket(bits)));
    }
    case 4:
      if (!qpos.empty()) {
        const std::size_t p = qpos[rng.index(qpos.size())];
        return at(p, 1, rng.coin() ? Diagram(Measure()) : Diagram(Bra(std::vector<int>{1})));
      }
      break;
    case 5:
      for (std::size_t i = 0; i < n; ++i)
        if (cur[i].name == "bit") return at(i, 1, rng.coin() ? Diagram(Encode()) : Diagram(Discard(bit)));
      break;
    case 6:
      if (n >= 2) {
        const std::size_t p = rng.index(n - 1);
        return at(p, 2, Diagram(swap_box(cur[p], cur[p + 1])));
      }
      break;
    case 7:
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (cur[i].name == "bit" && cur[i + 1].name == "qubit")
          return at(i, 2, Diagram(Controlled(rng.coin() ? X() : Rz(random_expr(rng)))));
      break;
    case 8:
      if (!qpos.empty()) {
        const std::size_t legs_out = rng.index(3);
        const Box s = zx::spider(rng.coin() ? zx::Color::Z : zx::Color::X, 1, legs_out,
                                 random_expr(rng));
        const bool flip = legs_out == 1 && rng.coin(0.3);
        return at(qpos[rng.index(qpos.size())], 1, Diagram(flip ? s.dagger() : s));
      }
      break;
    case 9: {
      const Diagram inner = Diagram(scalar(Complex(0.5, 0.0), random_expr(rng))) >>
                            phase_scalar(random_expr(rng));
      static const ScalarFn fns[] = {ScalarFn::Neg, ScalarFn::Exp, ScalarFn::Sin, ScalarFn::Cos,
                                     ScalarFn::Square};
      return at(rng.index(n + 1), 0, Diagram(Bubble(inner, fns[rng.index(5)])));
    }
    case 10:
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (cur[i].name == "qubit" && cur[i + 1].name == "qubit") {
          const std::vector<Complex> e{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, Complex(0, 1), 0, 0, 0, 0, 1};
          return at(i, 2, Diagram(rng.coin() ? CRz(random_expr(rng)) : custom_gate("G", 2, e)));
        }
      break;
    default: {
      const Ob q{"qudit", 3};
      return at(rng.index(n + 1), 0,
                Diagram(Box{"prep", Ty(), Ty{q}, BoxKind::Gate,
                            Entries{{0.5, Complex(0, 0.25), -1.0}}, false}));
    }
  }
  return Id(cur);
}

inline wiregram::Diagram random_document_diagram(Rng& rng, const wiregram::Ty& dom,
                                                 std::size_t layers) {
  using namespace wiregram;
  Diagram d = Id(dom);
  for (std::size_t k = 0; k < layers; ++k) d = d >> random_layer(rng, d.cod());
  return d;
}

inline wiregram::io::Document random_document(Rng& rng) {
  using namespace wiregram;
  static const Ty doms[] = {Ty(), qubit, qubit * qubit, bit * qubit, qubit * bit * qubit};
  const Ty dom = doms[rng.index(5)];
  const Diagram first = random_document_diagram(rng, dom, rng.index(8));
  if (rng.coin(0.8)) return first;
  // A sum of diagrams sharing first's boundary: scaled copies of it.
  std::vector<Diagram> terms{first};
  for (std::size_t k = 0; k < rng.index(3); ++k) {
    const Diagram extra = first * Diagram(scalar(Complex(rng.uniform(), 0.0)));
    terms.push_back(extra);
  }
  if (rng.coin(0.2)) terms.clear();
  return Sum(first.dom(), first.cod(), terms);
}

}  // namespace testing

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

#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wiregram/errors.hpp"
#include "wiregram/quantum.hpp"

using namespace wiregram;
using namespace testing;

TEST_CASE("basis states and CX") {
  CHECK(distance(eval_pure(Ket(1)), Mat(1, 2, {0, 1})) == 0.0);
  const Tensor out = eval_pure(Diagram(Ket(1, 0)) >> Diagram(CX()));
  CHECK(distance(out, Mat(1, 4, {0, 0, 0, 1})) == 0.0);
  CHECK(distance(eval_pure(Bra(0, 1)), Mat(4, 1, {0, 1, 0, 0})) == 0.0);
}

TEST_CASE("teleportation succeeds with amplitude one half") {
  const Diagram protocol = teleportation();
  const Tensor got = eval_pure(protocol);
  const Tensor want = eval_pure(Diagram(Ket(1)) * Diagram(scalar(0.5)));
  CHECK(t_distance(got, want) <= 1e-12);
  CHECK(distance(got, Mat(1, 2, {0, 0.5})) <= 1e-12);
}

TEST_CASE("catalog gates match textbook matrices") {
  const std::vector<std::pair<Box, Mat>> fixed{
      {H(), phys_H()},   {X(), phys_X()},   {Y(), phys_Y()},   {Z(), phys_Z()},
      {S(), phys_S()},   {T(), phys_T()},   {CX(), phys_CX()}, {CZ(), phys_CZ()},
      {SWAP(), phys_SWAP()}};
  for (const auto& [box, u] : fixed) {
    CAPTURE(box.name);
    // SWAP is structural, so go through the evaluator rather than gate_tensor.
    CHECK(distance(eval_pure(Diagram(box)), lib_layout(u)) < 1e-15);
    CHECK(distance(eval_pure(Diagram(box.dagger())), lib_layout(adjoint(u))) < 1e-15);
    const Tensor g = eval_pure(Diagram(box));
    CHECK(t_close(t_then(g, t_dagger(g)), Tensor::identity(g.dom()), 1e-12));
  }
}

TEST_CASE("parameterised gates are unitary and match their definitions") {
  Rng rng(51);
  for (int k = 0; k < 20; ++k) {
    const double t = rng.uniform(-2.0, 2.0);
    CHECK(distance(gate_tensor(Rz(t)), lib_layout(phys_Rz(t))) < 1e-14);
    CHECK(distance(gate_tensor(Rx(t)), lib_layout(phys_Rx(t))) < 1e-14);
    CHECK(distance(gate_tensor(CRz(t)), lib_layout(phys_CRz(t))) < 1e-14);
    for (const Box& b : {Rz(t), Rx(t), CRz(t)}) {
      const Tensor g = gate_tensor(b);
      CHECK(t_close(t_then(g, t_dagger(g)), Tensor::identity(g.dom()), 1e-12));
    }
    // Rx = H Rz H as diagrams too.
    const Tensor hzh = eval_pure(Diagram(H()) >> Rz(t) >> H());
    CHECK(t_close(eval_pure(Rx(t)), hzh, 1e-12));
  }
}

TEST_CASE("symbolic phases need bindings") {
  const Diagram c = Rz(Expr::var("v"));
  CHECK_THROWS_AS(eval_pure(c), UnboundVariable);
  CHECK(t_close(eval_pure(c, {{"v", 0.3}}), eval_pure(Rz(0.3)), 1e-15));
}

TEST_CASE("scalars") {
  CHECK(eval_pure(scalar(0.5))(0, 0) == Complex(0.5));
  CHECK(eval_pure(scalar({0.0, 2.0}, Expr::var("a")), {{"a", 3.0}})(0, 0) == Complex(0.0, 6.0));
  const Complex p = eval_pure(phase_scalar(0.5))(0, 0);
  CHECK(std::abs(p - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("random circuits match the dense reference") {
  Rng rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.index(4);
    const auto rc = random_circuit(rng, n, 1 + rng.index(15));
    const Mat u = rc.unitary({});
    CHECK(distance(eval_pure(rc.diagram), lib_layout(u)) < 1e-10);
    CHECK(t_distance(eval_pure(rc.diagram.dagger()), t_dagger(eval_pure(rc.diagram))) < 1e-10);
  }
}

TEST_CASE("iqp ansatz shape") {
  const Diagram zero = iqp_ansatz(2, {{Expr(0.0)}});
  CHECK(t_close(eval_pure(zero), eval_pure(Diagram(H()) * Diagram(H())), 1e-12));
  const Diagram half = iqp_ansatz(2, {{Expr(0.5)}});
  CHECK(well_typed(half).ok);
  CHECK(half.dom() == qubit.pow(2));
  CHECK(half.cod() == qubit.pow(2));
  CHECK(half.size() == 3);
  const Diagram three = iqp_ansatz(3, {{0.1, 0.2}, {0.3, 0.4}});
  CHECK(three.size() == 10);
  CHECK_THROWS_AS(iqp_ansatz(3, {{0.1}}), Error);
  CHECK_THROWS_AS(iqp_ansatz(1, {}), Error);
  // Dense reference for one 3-qubit layer.
  const Mat h3 = kron(kron(phys_H(), phys_H()), phys_H());
  const Mat u = matmul(kron(Mat::eye(2), phys_CRz(0.2)), matmul(kron(phys_CRz(0.1), Mat::eye(2)), h3));
  CHECK(distance(eval_pure(iqp_ansatz(3, {{0.1, 0.2}})), lib_layout(u)) < 1e-12);
}

TEST_CASE("mixed detection") {
  CHECK_FALSE(is_mixed(bell_state()));
  CHECK(is_mixed(bell_state() >> (Diagram(Measure()) * Diagram(Discard()))));
  CHECK(is_mixed(identity(bit)));
  CHECK(find_mixed(Diagram(H()) >> Measure()).value().find("Measure") != std::string::npos);
}

TEST_CASE("pure evaluation refuses mixed circuits with a named box") {
  const Diagram c = Diagram(Ket(0)) >> H() >> Measure();
  try {
    eval_pure(c);
    FAIL("expected SemanticsError");
  } catch (const SemanticsError& e) {
    CHECK(std::string(e.what()).find("Measure") != std::string::npos);
  }
}

TEST_CASE("controlled gates keep the gate name on a bit-extended domain") {
  const Box c = Controlled(X());
  CHECK(c.name == "X");
  CHECK(c.kind == BoxKind::Controlled);
  CHECK(c.dom == bit * qubit);
  CHECK(c.cod == bit * qubit);
}

TEST_CASE("custom gates carry explicit entries") {
  const Mat u = phys_Rx(0.3);
  std::vector<Complex> entries = lib_layout(u).a;
  const Box g = custom_gate("U", 1, entries);
  CHECK(distance(eval_pure(g), lib_layout(u)) < 1e-15);
}

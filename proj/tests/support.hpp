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

// Shared generators and independent reference implementations for tests.
// The oracles below never call into library evaluation code: matrices are
// plain row-major arrays and gates are written out from their textbook
// definitions.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wiregram/diagram.hpp"
#include "wiregram/functor.hpp"
#include "wiregram/quantum.hpp"

namespace testing {

using wiregram::Complex;
using std::numbers::pi;

inline constexpr Complex I{0.0, 1.0};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
  }
  bool coin(double p = 0.5) { return uniform() < p; }
  Complex complex() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 gen_;
};

// ------------------------------------------------------------ dense matrices

struct Mat {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<Complex> a = {1.0};

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  Mat(std::size_t r, std::size_t c, std::vector<Complex> v) : rows(r), cols(c), a(std::move(v)) {}
  Complex& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat eye(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Mat matmul(const Mat& x, const Mat& y) {
  Mat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k)
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) += x(i, k) * y(k, j);
  return out;
}

inline Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j)
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l)
          out(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
  return out;
}

inline Mat adjoint(const Mat& x) {
  Mat out(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out(j, i) = std::conj(x(i, j));
  return out;
}

inline Mat transpose(const Mat& x) {
  Mat out(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out(j, i) = x(i, j);
  return out;
}

inline Mat scaled(const Mat& x, Complex c) {
  Mat out = x;
  for (auto& v : out.a) v *= c;
  return out;
}

inline Mat added(const Mat& x, const Mat& y) {
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

inline Mat to_mat(const wiregram::Tensor& t) {
  return Mat(t.rows(), t.cols(), std::vector<Complex>(t.entries().begin(), t.entries().end()));
}

/// Largest entry-wise difference; infinity on a shape mismatch.
inline double distance(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

inline double distance(const wiregram::Tensor& t, const Mat& m) { return distance(to_mat(t), m); }

inline Mat random_mat(Rng& rng, std::size_t r, std::size_t c) {
  Mat m(r, c);
  for (auto& v : m.a) v = rng.complex();
  return m;
}

// ------------------------------------------------------ textbook gate set
// Physics convention: U(out, in), leftmost qubit most significant.

inline Mat phys(std::size_t n, std::initializer_list<Complex> v) { return Mat(n, n, v); }

inline Mat phys_H() {
  const double s = 1.0 / std::sqrt(2.0);
  return phys(2, {s, s, s, -s});
}
inline Mat phys_X() { return phys(2, {0, 1, 1, 0}); }
inline Mat phys_Y() { return phys(2, {0, -I, I, 0}); }
inline Mat phys_Z() { return phys(2, {1, 0, 0, -1}); }
inline Mat phys_S() { return phys(2, {1, 0, 0, I}); }
inline Mat phys_T() { return phys(2, {1, 0, 0, std::exp(I * pi / 4.0)}); }
inline Mat phys_Rz(double t) {
  return phys(2, {std::exp(-I * pi * t), 0, 0, std::exp(I * pi * t)});
}
inline Mat phys_Rx(double t) {
  const Complex c = std::cos(pi * t), s = -I * std::sin(pi * t);
  return phys(2, {c, s, s, c});
}
inline Mat phys_CX() {
  return phys(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}
inline Mat phys_CZ() {
  return phys(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
}
inline Mat phys_SWAP() {
  return phys(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}
inline Mat phys_CRz(double t) {
  Mat m = Mat::eye(4);
  m(2, 2) = std::exp(-I * pi * t);
  m(3, 3) = std::exp(I * pi * t);
  return m;
}

/// The library's tensor layout is [input][output], the transpose of U.
inline Mat lib_layout(const Mat& u) { return transpose(u); }

// --------------------------------------------------- random pure circuits

/// Phase given symbolically and as an independent numeric function.
struct RandomPhase {
  wiregram::Expr expr;
  std::function<double(const wiregram::Params&)> value;
};

/// Fourth-order central difference with step h: the O(h^2) term of the
/// three-point rule would exceed 1e-5 relative for circuits with several
/// gates sharing one variable.
inline Mat central_difference(const std::function<Mat(double)>& f, double x, double h) {
  Mat acc = added(scaled(f(x - 2.0 * h), 1.0), scaled(f(x - h), -8.0));
  acc = added(acc, scaled(f(x + h), 8.0));
  acc = added(acc, scaled(f(x + 2.0 * h), -1.0));
  return scaled(acc, 1.0 / (12.0 * h));
}

inline RandomPhase random_phase(Rng& rng, const std::vector<std::string>& vars) {
  const double c0 = rng.uniform(-1.0, 1.0);
  if (vars.empty() || rng.coin(0.2)) {
    return {wiregram::Expr(c0), [c0](const wiregram::Params&) { return c0; }};
  }
  const std::string v = vars[rng.index(vars.size())];
  const double c1 = rng.uniform(-1.0, 1.0);
  if (rng.coin(0.3)) {
    // c1 * v * v + c0
    auto e = wiregram::Expr(c1) * wiregram::Expr::var(v) * wiregram::Expr::var(v) +
             wiregram::Expr(c0);
    return {e, [=](const wiregram::Params& p) { return c1 * p.at(v) * p.at(v) + c0; }};
  }
  auto e = wiregram::Expr(c1) * wiregram::Expr::var(v) + wiregram::Expr(c0);
  return {e, [=](const wiregram::Params& p) { return c1 * p.at(v) + c0; }};
}

struct RandomCircuit {
  std::size_t n = 1;
  wiregram::Diagram diagram = wiregram::Id(wiregram::qubit);
  /// Physics-convention unitary as a function of the parameters.
  std::function<Mat(const wiregram::Params&)> unitary;
  /// Number of layers whose box depends on each variable.
  std::map<std::string, std::size_t> dependent_layers;
};

struct CircuitOptions {
  std::vector<std::string> vars;
  bool parametric_only = false;
  bool include_y = true;
  bool include_crz = true;
};

inline RandomCircuit random_circuit(Rng& rng, std::size_t n, std::size_t gates,
                                    const CircuitOptions& opt = {}) {
  using namespace wiregram;
  struct Step {
    std::size_t pos;
    std::size_t width;
    std::function<Mat(const Params&)> u;
  };
  std::vector<Step> steps;
  Diagram d = Id(qubit.pow(n));
  RandomCircuit out;
  out.n = n;
  for (std::size_t g = 0; g < gates; ++g) {
    std::size_t choice = rng.index(opt.parametric_only ? 3 : 12);
    if (opt.parametric_only) choice += 9;
    if (n < 2 && (choice == 6 || choice == 7 || choice == 8 || choice == 11)) choice = 0;
    if (!opt.include_y && choice == 2) choice = 0;
    if (!opt.include_crz && choice == 11) choice = 9;
    Box box;
    std::function<Mat(const Params&)> u;
    std::size_t width = 1;
    switch (choice) {
      case 0: box = H(); u = [](const Params&) { return phys_H(); }; break;
      case 1: box = X(); u = [](const Params&) { return phys_X(); }; break;
      case 2: box = Y(); u = [](const Params&) { return phys_Y(); }; break;
      case 3: box = Z(); u = [](const Params&) { return phys_Z(); }; break;
      case 4: box = S(); u = [](const Params&) { return phys_S(); }; break;
      case 5: box = T(); u = [](const Params&) { return phys_T(); }; break;
      case 6: box = CX(); u = [](const Params&) { return phys_CX(); }; width = 2; break;
      case 7: box = CZ(); u = [](const Params&) { return phys_CZ(); }; width = 2; break;
      case 8: box = SWAP(); u = [](const Params&) { return phys_SWAP(); }; width = 2; break;
      case 9: {
        auto ph = random_phase(rng, opt.vars);
        box = Rz(ph.expr);
        u = [f = ph.value](const Params& p) { return phys_Rz(f(p)); };
        break;
      }
      case 10: {
        auto ph = random_phase(rng, opt.vars);
        box = Rx(ph.expr);
        u = [f = ph.value](const Params& p) { return phys_Rx(f(p)); };
        break;
      }
      default: {
        auto ph = random_phase(rng, opt.vars);
        box = CRz(ph.expr);
        u = [f = ph.value](const Params& p) { return phys_CRz(f(p)); };
        width = 2;
        break;
      }
    }
    bool dag = rng.coin(0.15);
    if (dag) {
      box = box.dagger();
      u = [inner = u](const Params& p) { return adjoint(inner(p)); };
    }
    for (const auto& v : box.free_vars()) out.dependent_layers[v] += 1;
    const std::size_t pos = rng.index(n - width + 1);
    d = d >> Diagram(box).whisker(qubit.pow(pos), qubit.pow(n - pos - width));
    steps.push_back({pos, width, u});
  }
  out.diagram = d;
  out.unitary = [n, steps](const Params& p) {
    Mat total = Mat::eye(std::size_t{1} << n);
    for (const auto& s : steps) {
      Mat layer = kron(kron(Mat::eye(std::size_t{1} << s.pos), s.u(p)),
                       Mat::eye(std::size_t{1} << (n - s.pos - s.width)));
      total = matmul(layer, total);
    }
    return total;
  };
  return out;
}

// ---------------------------------------------- random generic diagrams

/// Random boxes over labels x, y, z of dimensions 2, 3, 5 with random
/// tensor images, registered in a functor and mirrored in a naive oracle.
class GenericWorld {
 public:
  explicit GenericWorld(Rng& rng) : rng_(rng) {
    functor_.set_ob("x", 2).set_ob("y", 3).set_ob("z", 5);
  }

  static std::size_t dim_of(const wiregram::Ob& ob) {
    return ob.name == "x" ? 2 : ob.name == "y" ? 3 : 5;
  }
  static std::size_t dim_of(const wiregram::Ty& ty) {
    std::size_t d = 1;
    for (const auto& ob : ty) d *= dim_of(ob);
    return d;
  }

  wiregram::Ty random_ty(std::size_t max_len = 2) {
    static const char* names[] = {"x", "y", "z"};
    std::vector<wiregram::Ob> obs;
    const std::size_t len = rng_.index(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) obs.push_back({names[rng_.index(3)], 0});
    return wiregram::Ty(obs);
  }

  wiregram::Box new_box(const wiregram::Ty& dom, const wiregram::Ty& cod) {
    wiregram::Box box{"f" + std::to_string(images_.size()), dom, cod,
                      wiregram::BoxKind::Gate, std::monostate{}, false};
    Mat m = random_mat(rng_, dim_of(dom), dim_of(cod));
    images_.push_back(m);
    functor_.set_ar(box, wiregram::Tensor(dims(dom), dims(cod), m.a));
    return box;
  }

  /// Random diagram of `layers` layers starting at `dom`; occasionally
  /// inserts swaps and daggered boxes.
  wiregram::Diagram random_diagram(const wiregram::Ty& dom, std::size_t layers) {
    using namespace wiregram;
    Diagram d = Id(dom);
    for (std::size_t k = 0; k < layers; ++k) {
      const Ty cur = d.cod();
      const std::size_t n = cur.size();
      const std::size_t start = rng_.index(n + 1);
      const std::size_t len = rng_.index(std::min<std::size_t>(2, n - start) + 1);
      const Ty left = cur.slice(0, start), mid = cur.slice(start, start + len),
               right = cur.slice(start + len, n);
      Diagram layer = Id(Ty());
      if (len == 2 && rng_.coin(0.25)) {
        layer = Diagram(swap_box(mid[0], mid[1]));
      } else {
        Ty cod = random_ty();
        if (left.size() + cod.size() + right.size() > 3) cod = Ty();
        if (rng_.coin(0.2)) {
          layer = Diagram(new_box(cod, mid).dagger());
        } else {
          layer = Diagram(new_box(mid, cod));
        }
      }
      d = d >> layer.whisker(left, right);
    }
    return d;
  }

  const wiregram::TensorFunctor& functor() const { return functor_; }

  /// Naive evaluation: one Kronecker-expanded matrix per layer, multiplied.
  Mat oracle(const wiregram::Diagram& d) const {
    Mat total = Mat::eye(dim_of(d.dom()));
    for (const auto& layer : d.layers()) {
      const auto& box = std::get<wiregram::Box>(layer.node);
      Mat image = box_oracle(box);
      Mat full = kron(kron(Mat::eye(dim_of(layer.left)), image), Mat::eye(dim_of(layer.right)));
      total = matmul(total, full);
    }
    return total;
  }

 private:
  static wiregram::Dim dims(const wiregram::Ty& ty) {
    std::vector<std::size_t> v;
    for (const auto& ob : ty) v.push_back(dim_of(ob));
    return wiregram::Dim(v);
  }

  Mat box_oracle(const wiregram::Box& box) const {
    if (box.kind == wiregram::BoxKind::Swap) {
      const std::size_t a = dim_of(box.dom[0]), b = dim_of(box.dom[1]);
      Mat m(a * b, a * b);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) m(i * b + j, j * a + i) = 1.0;
      return m;
    }
    const std::size_t idx = std::stoul(box.name.substr(1));
    return box.daggered ? adjoint(images_[idx]) : images_[idx];
  }

  Rng& rng_;
  wiregram::TensorFunctor functor_;
  std::vector<Mat> images_;
};

}  // namespace testing

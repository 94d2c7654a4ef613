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

#include "wiregram/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "wiregram/errors.hpp"

namespace wiregram {

namespace {

// std::complex multiplication goes through the NaN-recovering libgcc
// routine; the kernels below only ever see finite values.
inline void mul_add(Complex& out, Complex a, Complex b) {
  const double re = a.real() * b.real() - a.imag() * b.imag();
  const double im = a.real() * b.imag() + a.imag() * b.real();
  out = Complex(out.real() + re, out.imag() + im);
}

std::vector<std::size_t> drop_units(std::vector<std::size_t> dims) {
  for (auto d : dims) {
    if (d == 0) throw Error("dimension must be positive");
  }
  std::erase(dims, std::size_t{1});
  return dims;
}

}  // namespace

std::string_view scalar_fn_name(ScalarFn fn) {
  switch (fn) {
    case ScalarFn::Neg:
      return "neg";
    case ScalarFn::Exp:
      return "exp";
    case ScalarFn::Sin:
      return "sin";
    case ScalarFn::Cos:
      return "cos";
    case ScalarFn::Square:
      return "square";
  }
  return "?";
}

ScalarFn parse_scalar_fn(std::string_view name) {
  for (auto fn : {ScalarFn::Neg, ScalarFn::Exp, ScalarFn::Sin, ScalarFn::Cos,
                  ScalarFn::Square}) {
    if (scalar_fn_name(fn) == name) return fn;
  }
  throw Error("unknown bubble function '" + std::string(name) + "'");
}

Complex apply_scalar_fn(ScalarFn fn, Complex z) {
  switch (fn) {
    case ScalarFn::Neg:
      return -z;
    case ScalarFn::Exp:
      return std::exp(z);
    case ScalarFn::Sin:
      return std::sin(z);
    case ScalarFn::Cos:
      return std::cos(z);
    case ScalarFn::Square:
      return z * z;
  }
  return z;
}

Dim::Dim(std::initializer_list<std::size_t> dims)
    : dims_(drop_units(std::vector<std::size_t>(dims))) {}

Dim::Dim(std::vector<std::size_t> dims) : dims_(drop_units(std::move(dims))) {}

std::size_t Dim::size() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                         std::multiplies<>());
}

std::string Dim::str() const {
  std::ostringstream out;
  out << "Dim(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) out << ", ";
    out << dims_[i];
  }
  out << ")";
  return out.str();
}

Dim operator*(const Dim& a, const Dim& b) {
  std::vector<std::size_t> dims(a.dims_);
  dims.insert(dims.end(), b.dims_.begin(), b.dims_.end());
  return Dim(std::move(dims));
}

Tensor::Tensor(Dim dom, Dim cod, std::vector<Complex> entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
  if (entries_.size() != dom_.size() * cod_.size()) {
    throw DimensionMismatch("tensor " + dom_.str() + " -> " + cod_.str() +
                            " needs " +
                            std::to_string(dom_.size() * cod_.size()) +
                            " entries, got " + std::to_string(entries_.size()));
  }
}

Tensor Tensor::identity(const Dim& dim) {
  Tensor out = zeros(dim, dim);
  for (std::size_t i = 0; i < dim.size(); ++i) out(i, i) = 1.0;
  return out;
}

Tensor Tensor::scalar(Complex value) { return Tensor(Dim{}, Dim{}, {value}); }

Tensor Tensor::zeros(Dim dom, Dim cod) {
  const std::size_t n = dom.size() * cod.size();
  return Tensor(std::move(dom), std::move(cod), std::vector<Complex>(n));
}

Tensor t_then(const Tensor& f, const Tensor& g) {
  if (f.cod() != g.dom()) {
    throw DimensionMismatch("cannot contract " + f.cod().str() + " with " +
                            g.dom().str());
  }
  return apply_layer(f, 1, g, 1, g.cod());
}

Tensor t_tensor(const Tensor& f, const Tensor& g) {
  Tensor out = Tensor::zeros(f.dom() * g.dom(), f.cod() * g.cod());
  const std::size_t fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();
  auto entries = out.mutable_entries();
  for (std::size_t i = 0; i < fr; ++i) {
    for (std::size_t k = 0; k < gr; ++k) {
      const std::size_t row = i * gr + k;
      for (std::size_t j = 0; j < fc; ++j) {
        const Complex a = f(i, j);
        if (a == Complex(0.0)) continue;
        for (std::size_t l = 0; l < gc; ++l) {
          mul_add(entries[row * fc * gc + j * gc + l], a, g(k, l));
        }
      }
    }
  }
  return out;
}

Tensor t_dagger(const Tensor& f) {
  Tensor out = Tensor::zeros(f.cod(), f.dom());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out(j, i) = std::conj(f(i, j));
  }
  return out;
}

Tensor t_conj(const Tensor& f) {
  std::vector<Complex> entries(f.entries().begin(), f.entries().end());
  for (auto& z : entries) z = std::conj(z);
  return Tensor(f.dom(), f.cod(), std::move(entries));
}

double t_distance(const Tensor& f, const Tensor& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  auto a = f.entries();
  auto b = g.entries();
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

bool t_close(const Tensor& f, const Tensor& g, double tol) {
  return t_distance(f, g) <= tol;
}

Tensor t_map(const Tensor& f, ScalarFn fn) {
  std::vector<Complex> entries(f.entries().begin(), f.entries().end());
  for (auto& z : entries) z = apply_scalar_fn(fn, z);
  return Tensor(f.dom(), f.cod(), std::move(entries));
}

Tensor t_add(const Tensor& f, const Tensor& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw DimensionMismatch("cannot add " + f.dom().str() + " -> " +
                            f.cod().str() + " and " + g.dom().str() + " -> " +
                            g.cod().str());
  }
  std::vector<Complex> entries(f.entries().begin(), f.entries().end());
  auto other = g.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += other[i];
  return Tensor(f.dom(), f.cod(), std::move(entries));
}

Tensor t_scale(const Tensor& f, Complex c) {
  std::vector<Complex> entries(f.entries().begin(), f.entries().end());
  for (auto& z : entries) z *= c;
  return Tensor(f.dom(), f.cod(), std::move(entries));
}

Tensor apply_layer(const Tensor& acc, std::size_t left, const Tensor& box,
                   std::size_t right, Dim result_cod) {
  const std::size_t a = box.rows();
  const std::size_t b = box.cols();
  if (acc.cols() != left * a * right) {
    throw DimensionMismatch("layer expects " + std::to_string(left * a * right) +
                            " input wires' worth of entries, accumulator has " +
                            std::to_string(acc.cols()));
  }
  if (result_cod.size() != left * b * right) {
    throw DimensionMismatch("layer codomain " + result_cod.str() +
                            " does not match the box image");
  }
  Tensor out = Tensor::zeros(acc.dom(), std::move(result_cod));
  const std::size_t blocks = acc.rows() * left;
  auto src = acc.entries();
  auto dst = out.mutable_entries();
  auto weights = box.entries();
  // Nonzero box entries, gathered once.
  struct Term {
    std::size_t i, j;
    double re, im;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (const Complex w = weights[i * b + j]; w != Complex(0.0)) {
        terms.push_back({i, j, w.real(), w.imag()});
      }
  for (std::size_t block = 0; block < blocks; ++block) {
    const double* __restrict in = reinterpret_cast<const double*>(src.data() + block * a * right);
    double* __restrict res = reinterpret_cast<double*>(dst.data() + block * b * right);
    for (const Term& t : terms) {
      const double* __restrict x = in + 2 * t.i * right;
      double* __restrict y = res + 2 * t.j * right;
      for (std::size_t r = 0; r < right; ++r) {
        const double xr = x[2 * r], xi = x[2 * r + 1];
        y[2 * r] += xr * t.re - xi * t.im;
        y[2 * r + 1] += xr * t.im + xi * t.re;
      }
    }
  }
  return out;
}

Tensor t_permute(const Tensor& t, std::span<const std::size_t> dom_shape,
                 std::span<const std::size_t> dom_order,
                 std::span<const std::size_t> cod_shape,
                 std::span<const std::size_t> cod_order, Dim new_dom,
                 Dim new_cod) {
  // For each boundary, map every input flat index to its output flat index.
  auto index_map = [](std::span<const std::size_t> shape,
                      std::span<const std::size_t> order) {
    const std::size_t n = shape.size();
    if (order.size() != n) throw DimensionMismatch("permutation rank mismatch");
    std::vector<std::size_t> out_shape(n);
    for (std::size_t k = 0; k < n; ++k) out_shape[k] = shape[order[k]];
    // stride of input axis order[k] in the output layout
    std::vector<std::size_t> out_stride_of_input(n);
    std::size_t stride = 1;
    for (std::size_t k = n; k-- > 0;) {
      out_stride_of_input[order[k]] = stride;
      stride *= out_shape[k];
    }
    std::vector<std::size_t> mapping(stride);
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t flat = 0; flat < stride; ++flat) {
      std::size_t target = 0;
      for (std::size_t axis = 0; axis < n; ++axis) {
        target += digits[axis] * out_stride_of_input[axis];
      }
      mapping[flat] = target;
      for (std::size_t axis = n; axis-- > 0;) {
        if (++digits[axis] < shape[axis]) break;
        digits[axis] = 0;
      }
    }
    return mapping;
  };
  auto rows = index_map(dom_shape, dom_order);
  auto cols = index_map(cod_shape, cod_order);
  if (rows.size() != t.rows() || cols.size() != t.cols()) {
    throw DimensionMismatch("permutation shape does not match tensor");
  }
  Tensor out = Tensor::zeros(std::move(new_dom), std::move(new_cod));
  if (out.rows() != t.rows() || out.cols() != t.cols()) {
    throw DimensionMismatch("permuted boundaries change the tensor size");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(rows[i], cols[j]) = t(i, j);
  }
  return out;
}

}  // namespace wiregram

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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wiregram {

using Complex = std::complex<double>;

/// Entry-wise scalar functions that bubbles apply to their contents.
enum class ScalarFn { Neg, Exp, Sin, Cos, Square };

std::string_view scalar_fn_name(ScalarFn fn);
/// Throws Error on unknown names.
ScalarFn parse_scalar_fn(std::string_view name);
Complex apply_scalar_fn(ScalarFn fn, Complex z);

/// Sequence of wire dimensions. Dimension-1 wires are dropped on
/// construction, so `Dim{1}` and `Dim{}` are the same boundary.
class Dim {
 public:
  Dim() = default;
  Dim(std::initializer_list<std::size_t> dims);
  explicit Dim(std::vector<std::size_t> dims);

  std::span<const std::size_t> dims() const { return dims_; }
  std::size_t rank() const { return dims_.size(); }
  /// Product of the entries; 1 for the empty Dim.
  std::size_t size() const;
  std::string str() const;

  friend Dim operator*(const Dim& a, const Dim& b);
  friend bool operator==(const Dim&, const Dim&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Dense complex tensor from `dom` to `cod`. Entries are row-major with the
/// dom multi-index as the row and the cod multi-index as the column; the
/// leftmost wire of each boundary is the most significant digit.
class Tensor {
 public:
  Tensor() : entries_(1, Complex(1.0)) {}
  Tensor(Dim dom, Dim cod, std::vector<Complex> entries);

  static Tensor identity(const Dim& dim);
  static Tensor scalar(Complex value);
  static Tensor zeros(Dim dom, Dim cod);

  const Dim& dom() const { return dom_; }
  const Dim& cod() const { return cod_; }
  std::size_t rows() const { return dom_.size(); }
  std::size_t cols() const { return cod_.size(); }
  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> mutable_entries() { return entries_; }

  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * cols() + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * cols() + col];
  }

 private:
  Dim dom_;
  Dim cod_;
  std::vector<Complex> entries_;
};

/// Contraction of `f.cod` against `g.dom`. Throws DimensionMismatch.
Tensor t_then(const Tensor& f, const Tensor& g);
/// Kronecker product, `f`'s indices more significant.
Tensor t_tensor(const Tensor& f, const Tensor& g);
/// Conjugate transpose.
Tensor t_dagger(const Tensor& f);
Tensor t_conj(const Tensor& f);
/// True iff the boundaries match and every entry differs by at most `tol`.
bool t_close(const Tensor& f, const Tensor& g, double tol);
/// Largest entry-wise absolute difference, or +inf on boundary mismatch.
double t_distance(const Tensor& f, const Tensor& g);
Tensor t_map(const Tensor& f, ScalarFn fn);
Tensor t_add(const Tensor& f, const Tensor& g);
Tensor t_scale(const Tensor& f, Complex c);

/// Contracts the `box_dom` segment of `acc`'s codomain against `box`.
///
/// `acc.cod` is read as the shape (left, box_dom, right) flattened, with
/// `left` and `right` the total sizes of the wires either side of the box.
/// The result keeps `acc.dom` and has codomain `result_cod`, whose size must
/// be `left * box.cols() * right`. This is the per-layer kernel of functor
/// application: it never materialises the whiskered box.
Tensor apply_layer(const Tensor& acc, std::size_t left, const Tensor& box,
                   std::size_t right, Dim result_cod);

/// Reorders the axes of each boundary. `dom_shape`/`cod_shape` give the
/// axis sizes (their products must match the boundary sizes); output axis k
/// is input axis `order[k]`. The output boundaries are `new_dom`/`new_cod`.
Tensor t_permute(const Tensor& t, std::span<const std::size_t> dom_shape,
                 std::span<const std::size_t> dom_order,
                 std::span<const std::size_t> cod_shape,
                 std::span<const std::size_t> cod_order, Dim new_dom,
                 Dim new_cod);

}  // namespace wiregram

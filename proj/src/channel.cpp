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

#include "wiregram/channel.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "wiregram/errors.hpp"
#include "wiregram/quantum.hpp"

namespace wiregram {

namespace {

std::size_t base_dim(const Ob& ob) {
  if (ob.name == "qubit" || ob.name == "bit") return 2;
  if (ob.dim > 0) return ob.dim;
  throw MissingRule("no dimension for object '" + ob.str() + "'");
}

CQ cq_of(const Ty& ty) {
  std::vector<std::size_t> classical, quantum;
  for (const auto& ob : ty) {
    (is_classical(ob) ? classical : quantum).push_back(base_dim(ob));
  }
  return {Dim(classical), Dim(quantum)};
}

// Interleaves the (bra block, ket block) layout of a doubled pure map into
// one (bra, ket) pair per wire.
Tensor interleave(const Tensor& doubled, const std::vector<std::size_t>& dom_dims,
                  const std::vector<std::size_t>& cod_dims) {
  auto plan = [](const std::vector<std::size_t>& dims) {
    const std::size_t k = dims.size();
    std::vector<std::size_t> shape(dims), order, squared;
    shape.insert(shape.end(), dims.begin(), dims.end());
    for (std::size_t w = 0; w < k; ++w) {
      order.push_back(w);
      order.push_back(k + w);
      squared.push_back(dims[w] * dims[w]);
    }
    return std::tuple{shape, order, Dim(squared)};
  };
  auto [dom_shape, dom_order, dom] = plan(dom_dims);
  auto [cod_shape, cod_order, cod] = plan(cod_dims);
  return t_permute(doubled, dom_shape, dom_order, cod_shape, cod_order, dom, cod);
}

std::vector<std::size_t> wire_dims(const Ty& ty) {
  std::vector<std::size_t> dims;
  for (const auto& ob : ty) {
    if (is_classical(ob)) {
      throw SemanticsError("pure box acting on classical wire '" + ob.str() + "'");
    }
    dims.push_back(base_dim(ob));
  }
  return dims;
}

Tensor doubled_per_wire(const Tensor& f, const Ty& dom, const Ty& cod) {
  return interleave(t_tensor(t_conj(f), f), wire_dims(dom), wire_dims(cod));
}

// Regroups per-wire indices of a boundary into (classical, bras, kets).
struct Regroup {
  std::vector<std::size_t> shape;
  std::vector<std::size_t> order;
};

Regroup regroup(const Ty& ty) {
  Regroup out;
  std::vector<std::size_t> classical, bras, kets;
  for (const auto& ob : ty) {
    const std::size_t n = base_dim(ob);
    if (is_classical(ob)) {
      classical.push_back(out.shape.size());
      out.shape.push_back(n);
    } else {
      bras.push_back(out.shape.size());
      out.shape.push_back(n);
      kets.push_back(out.shape.size());
      out.shape.push_back(n);
    }
  }
  out.order = classical;
  out.order.insert(out.order.end(), bras.begin(), bras.end());
  out.order.insert(out.order.end(), kets.begin(), kets.end());
  return out;
}

bool is_unitary(const Tensor& u, double tol) {
  if (u.dom() != u.cod()) return false;
  return t_close(t_then(u, t_dagger(u)), Tensor::identity(u.dom()), tol);
}

const TensorFunctor& pure_functor() {
  static const TensorFunctor functor = quantum_functor();
  return functor;
}

Tensor controlled_image(const Box& box, const Params& params) {
  if (box.dom.empty() || !is_classical(box.dom[0]) || base_dim(box.dom[0]) != 2) {
    throw SemanticsError("controlled box '" + box.label() +
                         "' needs a bit as its first wire");
  }
  const Ty gate_wires = box.dom.slice(1, box.dom.size());
  Box gate{box.name, gate_wires, gate_wires, BoxKind::Gate, box.payload, false};
  const Tensor u = gate_tensor(gate, params);
  if (!is_unitary(u, 1e-10)) {
    throw SemanticsError("controlled gate '" + gate.label() + "' is not unitary");
  }
  const Tensor on = doubled_per_wire(u, gate_wires, gate_wires);
  const std::size_t n = on.rows();
  Tensor out = Tensor::zeros(Dim{2} * on.dom(), Dim{2} * on.cod());
  for (std::size_t x = 0; x < n; ++x) {
    out(x, x) = 1.0;
    for (std::size_t y = 0; y < n; ++y) out(n + x, n + y) = on(x, y);
  }
  return out;
}

// Per-wire dimension of an object in the channel semantics: classical
// wires keep their dimension, quantum wires carry a (bra, ket) pair.
std::size_t wire_ob(const Ob& ob) {
  const std::size_t n = base_dim(ob);
  return is_classical(ob) ? n : n * n;
}

Dim wire_ob(const Ty& ty) {
  std::vector<std::size_t> dims;
  dims.reserve(ty.size());
  for (const auto& o : ty) dims.push_back(wire_ob(o));
  return Dim(std::move(dims));
}

Tensor wire_image(const Box& box, const Params& params) {
  if (box.daggered) return t_dagger(wire_image(box.undaggered(), params));
  switch (box.kind) {
    case BoxKind::Swap:
      return swap_tensor(wire_ob(box.dom[0]), wire_ob(box.dom[1]));
    case BoxKind::Measure:
      return measure_channel(base_dim(box.dom[0])).tensor();
    case BoxKind::Encode:
      return encode_channel(base_dim(box.dom[0])).tensor();
    case BoxKind::Discard: {
      Tensor acc = Tensor::scalar(1.0);
      for (const auto& ob : box.dom) {
        const std::size_t n = base_dim(ob);
        acc = t_tensor(acc, is_classical(ob) ? discard_channel(1, n).tensor()
                                             : discard_channel(n, 1).tensor());
      }
      return acc;
    }
    case BoxKind::Controlled:
      return controlled_image(box, params);
    default:
      return doubled_per_wire(pure_functor().box_image(box, params), box.dom, box.cod);
  }
}

}  // namespace

std::string CQ::str() const {
  return "CQ(classical=" + classical.str() + ", quantum=" + quantum.str() + ")";
}

Channel::Channel(CQ dom, CQ cod, Tensor entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
  if (entries_.dom() != dom_.doubled() || entries_.cod() != cod_.doubled()) {
    throw DimensionMismatch("channel " + dom_.str() + " -> " + cod_.str() +
                            " cannot hold a tensor " + entries_.dom().str() +
                            " -> " + entries_.cod().str());
  }
}

Channel pure(const Tensor& f) {
  return Channel(CQ{Dim{}, f.dom()}, CQ{Dim{}, f.cod()}, t_tensor(t_conj(f), f));
}

Channel measure_channel(std::size_t n) {
  Tensor t = Tensor::zeros(Dim{n, n}, Dim{n});
  for (std::size_t k = 0; k < n; ++k) t(k * n + k, k) = 1.0;
  return Channel(CQ{Dim{}, Dim{n}}, CQ{Dim{n}, Dim{}}, std::move(t));
}

Channel encode_channel(std::size_t n) {
  Tensor t = Tensor::zeros(Dim{n}, Dim{n, n});
  for (std::size_t k = 0; k < n; ++k) t(k, k * n + k) = 1.0;
  return Channel(CQ{Dim{n}, Dim{}}, CQ{Dim{}, Dim{n}}, std::move(t));
}

Channel discard_channel(std::size_t q, std::size_t c) {
  Tensor t = Tensor::zeros(Dim{c, q, q}, Dim{});
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t i = 0; i < q; ++i) t((k * q + i) * q + i, 0) = 1.0;
  }
  return Channel(CQ{Dim{c}, Dim{q}}, CQ{}, std::move(t));
}

Channel controlled_channel(const Tensor& u) {
  if (!is_unitary(u, 1e-10)) throw SemanticsError("controlled payload is not unitary");
  const Tensor on = pure(u).tensor();
  const std::size_t n = on.rows();
  Tensor out = Tensor::zeros(Dim{2} * on.dom(), Dim{2} * on.cod());
  for (std::size_t x = 0; x < n; ++x) {
    out(x, x) = 1.0;
    for (std::size_t y = 0; y < n; ++y) out(n + x, n + y) = on(x, y);
  }
  return Channel(CQ{Dim{2}, u.dom()}, CQ{Dim{2}, u.cod()}, std::move(out));
}

Channel distribution_state(std::vector<double> probabilities) {
  const std::size_t n = probabilities.size();
  std::vector<Complex> entries(probabilities.begin(), probabilities.end());
  return Channel(CQ{}, CQ{Dim{n}, Dim{}}, Tensor(Dim{}, Dim{n}, std::move(entries)));
}

Channel c_then(const Channel& f, const Channel& g) {
  if (f.cod() != g.dom()) {
    throw DimensionMismatch("cannot compose channels: " + f.cod().str() + " vs " +
                            g.dom().str());
  }
  return Channel(f.dom(), g.cod(), t_then(f.tensor(), g.tensor()));
}

Channel c_tensor(const Channel& f, const Channel& g) {
  auto shape = [](const CQ& a, const CQ& b) {
    const std::size_t qa = a.quantum.size(), qb = b.quantum.size();
    return std::vector<std::size_t>{a.classical.size(), qa, qa,
                                    b.classical.size(), qb, qb};
  };
  static const std::vector<std::size_t> order{0, 3, 1, 4, 2, 5};
  const CQ dom = f.dom() * g.dom();
  const CQ cod = f.cod() * g.cod();
  const auto dom_shape = shape(f.dom(), g.dom());
  const auto cod_shape = shape(f.cod(), g.cod());
  return Channel(dom, cod,
                 t_permute(t_tensor(f.tensor(), g.tensor()), dom_shape, order,
                           cod_shape, order, dom.doubled(), cod.doubled()));
}

double c_distance(const Channel& f, const Channel& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    return std::numeric_limits<double>::infinity();
  }
  return t_distance(f.tensor(), g.tensor());
}

bool c_close(const Channel& f, const Channel& g, double tol) {
  return c_distance(f, g) <= tol;
}

Channel c_scale(const Channel& f, double factor) {
  return Channel(f.dom(), f.cod(), t_scale(f.tensor(), factor));
}

Channel density_state(const Tensor& rho) {
  if (rho.dom() != rho.cod()) throw DimensionMismatch("density matrix must be square");
  const std::size_t n = rho.rows();
  Tensor t = Tensor::zeros(Dim{}, rho.dom() * rho.dom());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(0, i * n + j) = rho(j, i);
  }
  return Channel(CQ{}, CQ{Dim{}, rho.dom()}, std::move(t));
}

Tensor density_matrix(const Channel& state) {
  if (state.dom() != CQ{} || state.cod().classical.size() != 1) {
    throw DimensionMismatch("not a quantum state: " + state.dom().str() + " -> " +
                            state.cod().str());
  }
  const std::size_t n = state.cod().quantum.size();
  Tensor rho = Tensor::zeros(state.cod().quantum, state.cod().quantum);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rho(j, i) = state.tensor()(0, i * n + j);
  }
  return rho;
}

Channel eval_channel(const Diagram& c, const Params& params) {
  Tensor acc = Tensor::identity(wire_ob(c.dom()));
  for (const auto& layer : c.layers()) {
    const auto* box = std::get_if<Box>(&layer.node);
    if (!box) {
      throw SemanticsError("bubble '" + node_label(layer.node) +
                           "' has no channel semantics");
    }
    Tensor image = wire_image(*box, params);
    const Dim expected_dom = wire_ob(box->dom), expected_cod = wire_ob(box->cod);
    if (image.rows() != expected_dom.size() || image.cols() != expected_cod.size()) {
      throw DimensionMismatch("channel image of '" + box->label() +
                              "' has the wrong shape");
    }
    // Same row-major data; only the axis grouping changes.
    if (image.dom() != expected_dom || image.cod() != expected_cod) {
      const auto e = image.entries();
      image = Tensor(expected_dom, expected_cod, std::vector<Complex>(e.begin(), e.end()));
    }
    acc = apply_layer(acc, wire_ob(layer.left).size(), image,
                      wire_ob(layer.right).size(), wire_ob(layer.cod()));
  }
  const Regroup dom = regroup(c.dom());
  const Regroup cod = regroup(c.cod());
  const CQ dom_cq = cq_of(c.dom());
  const CQ cod_cq = cq_of(c.cod());
  return Channel(dom_cq, cod_cq,
                 t_permute(acc, dom.shape, dom.order, cod.shape, cod.order,
                           dom_cq.doubled(), cod_cq.doubled()));
}

}  // namespace wiregram

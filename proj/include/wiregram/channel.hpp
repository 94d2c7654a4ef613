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

#include "wiregram/diagram.hpp"
#include "wiregram/functor.hpp"
#include "wiregram/tensor.hpp"

namespace wiregram {

/// Boundary of a classical-quantum map.
struct CQ {
  Dim classical;
  Dim quantum;

  /// Dimension of the doubled system: classical * quantum * quantum.
  Dim doubled() const { return classical * quantum * quantum; }
  std::string str() const;

  friend CQ operator*(const CQ& a, const CQ& b) {
    return {a.classical * b.classical, a.quantum * b.quantum};
  }
  friend bool operator==(const CQ&, const CQ&) = default;
};

/// Classical-quantum map. Each boundary is indexed (classical, bra, ket):
/// classical wires once, quantum wires twice, with the conjugate (bra)
/// copy more significant than the ket copy.
///
/// A state on quantum system n has entries S[(i, j)] = rho[j][i], so the
/// channel of a pure state psi has S[(i, j)] = conj(psi_i) psi_j.
class Channel {
 public:
  Channel(CQ dom, CQ cod, Tensor entries);

  const CQ& dom() const { return dom_; }
  const CQ& cod() const { return cod_; }
  const Tensor& tensor() const { return entries_; }

 private:
  CQ dom_;
  CQ cod_;
  Tensor entries_;
};

/// Doubling: conj(f) (x) f.
Channel pure(const Tensor& f);
Channel measure_channel(std::size_t n);
Channel encode_channel(std::size_t n);
/// Traces out a quantum system of dimension `q` and marginalises a
/// classical one of dimension `c`.
Channel discard_channel(std::size_t q, std::size_t c);
/// Classical control of the unitary `u` by a bit. Throws SemanticsError if
/// `u` is not unitary within 1e-10.
Channel controlled_channel(const Tensor& u);
/// A classical probability distribution as a state.
Channel distribution_state(std::vector<double> probabilities);

Channel c_then(const Channel& f, const Channel& g);
Channel c_tensor(const Channel& f, const Channel& g);
bool c_close(const Channel& f, const Channel& g, double tol);
double c_distance(const Channel& f, const Channel& g);
Channel c_scale(const Channel& f, double factor);

/// Density matrix as a state channel.
Channel density_state(const Tensor& rho);
/// Density matrix of a state with no classical part.
Tensor density_matrix(const Channel& state);

/// Interpretation in classical-quantum maps: pure boxes are doubled,
/// Measure/Encode/Discard/Controlled boxes map to their channels.
/// Evaluation contracts layer by layer with each quantum wire carrying its
/// (bra, ket) index pair and regroups the indices at the end.
Channel eval_channel(const Diagram& c, const Params& params = {});

}  // namespace wiregram

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

#include <string>

#include "wiregram/diagram.hpp"
#include "wiregram/expr.hpp"

namespace wiregram {

/// Gradient of a single box as a formal sum with the box's boundaries.
///
/// Rz, Rx and CRz insert their generator next to the gate:
///   d Rz(f) = -i pi f' . Z . Rz(f)
///   d Rx(f) = -i pi f' . X . Rx(f)
///   d CRz(f) = -i pi f' . (|1><1| (x) Z) . CRz(f)
/// Scalars differentiate their expression. Boxes that do not depend on
/// `variable` give the empty sum. Throws UnsupportedBox otherwise.
Sum gate_grad(const Box& box, const std::string& variable);

/// Product rule over layers: one group of terms per layer whose box
/// depends on `variable`, with that box replaced by its gradient.
Sum diagram_grad(const Diagram& d, const std::string& variable);
Sum diagram_grad(const Sum& s, const std::string& variable);

/// Chain rule for a bubble around a scalar diagram:
/// d g(f) = g'(f) (x) d f, with g' drawn from the same catalog.
/// Throws UnsupportedBox when the inner diagram is not a scalar.
Sum bubble_grad(const Bubble& bubble, const std::string& variable);

}  // namespace wiregram

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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace wiregram {

/// A wire label. `dim` is an optional dimension hint (0 when absent) used
/// by functors that have no explicit rule for the label.
struct Ob {
  std::string name;
  std::size_t dim = 0;

  std::string str() const;
  friend bool operator==(const Ob&, const Ob&) = default;
  friend auto operator<=>(const Ob&, const Ob&) = default;
};

/// Ordered sequence of wire labels. Tensoring is concatenation and the
/// empty Ty is the unit.
class Ty {
 public:
  Ty() = default;
  Ty(std::initializer_list<Ob> objects) : objects_(objects) {}
  explicit Ty(std::vector<Ob> objects) : objects_(std::move(objects)) {}
  explicit Ty(Ob object) : objects_{std::move(object)} {}

  std::span<const Ob> objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  bool empty() const { return objects_.empty(); }
  const Ob& operator[](std::size_t i) const { return objects_[i]; }
  auto begin() const { return objects_.begin(); }
  auto end() const { return objects_.end(); }

  /// Wires `[begin, end)`.
  Ty slice(std::size_t begin, std::size_t end) const;
  Ty pow(std::size_t n) const;
  std::string str() const;

  friend Ty operator*(const Ty& a, const Ty& b);
  friend bool operator==(const Ty&, const Ty&) = default;
  friend auto operator<=>(const Ty&, const Ty&) = default;

 private:
  std::vector<Ob> objects_;
};

inline const Ty qubit{Ob{"qubit"}};
inline const Ty bit{Ob{"bit"}};

/// Quantum wire of dimension `n`; `qudit(2)` is a distinct label from qubit.
inline Ty qudit(std::size_t n) { return Ty{Ob{"qudit", n}}; }
/// Classical wire of dimension `n`.
inline Ty digit(std::size_t n) { return Ty{Ob{"digit", n}}; }

/// Classical labels are `bit` and `digit`; every other label is quantum.
bool is_classical(const Ob& ob);

}  // namespace wiregram

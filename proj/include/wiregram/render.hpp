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
#include <vector>

#include "wiregram/diagram.hpp"

namespace wiregram::render {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Shape { Rect, ZSpider, XSpider };

/// A box drawn at grid row `row` (its layer index), spanning `width`
/// columns from `column` (the number of wires in its left whisker).
struct BoxPlacement {
  std::size_t row = 0;
  std::size_t column = 0;
  std::size_t width = 1;
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::string label;
  Shape shape = Shape::Rect;
  friend bool operator==(const BoxPlacement&, const BoxPlacement&) = default;
};

/// One wire from where it starts (top boundary or box output) to where it
/// ends (box input or bottom boundary).
struct WirePath {
  std::string label;
  std::vector<Point> points;
  friend bool operator==(const WirePath&, const WirePath&) = default;
};

/// Grid layout in abstract cells: x is the wire column, y grows downwards
/// with one unit per layer. Boxes occupy the middle of their row so wires
/// bend only above and below them.
struct Layout {
  std::vector<BoxPlacement> boxes;
  std::vector<WirePath> wires;
  double width = 1.0;
  double height = 1.0;
};

/// Throws TypeError on ill-typed diagrams.
Layout layout(const Diagram& d);

/// Standalone tikzpicture; one grid cell is `scale` centimetres.
std::string to_tikz(const Layout& l, double scale = 1.0);
/// Standalone SVG 1.1 document; one grid cell is `scale` pixels.
std::string to_svg(const Layout& l, double scale = 40.0);

}  // namespace wiregram::render

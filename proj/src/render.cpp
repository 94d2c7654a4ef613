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

#include "wiregram/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "wiregram/errors.hpp"

namespace wiregram::render {

namespace {

constexpr double kBoxTop = 0.3;
constexpr double kBoxBottom = 0.7;
constexpr double kHalfWidth = 0.35;
constexpr double kMargin = 0.6;

// Wire currently open at a given column, with the points visited so far.
struct OpenWire {
  std::string label;
  std::vector<Point> points;
};

bool collinear(const Point& a, const Point& b, const Point& c) {
  return std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) < 1e-12;
}

WirePath close_wire(OpenWire w) {
  std::vector<Point> pts;
  for (const auto& p : w.points) {
    if (!pts.empty() && pts.back() == p) continue;
    while (pts.size() >= 2 && collinear(pts[pts.size() - 2], pts.back(), p)) pts.pop_back();
    pts.push_back(p);
  }
  return WirePath{std::move(w.label), std::move(pts)};
}

BoxPlacement place(const Node& node, std::size_t row, std::size_t column) {
  BoxPlacement b;
  b.row = row;
  b.column = column;
  b.inputs = node_dom(node).size();
  b.outputs = node_cod(node).size();
  b.width = std::max<std::size_t>({b.inputs, b.outputs, 1});
  b.label = node_label(node);
  if (const auto* box = std::get_if<Box>(&node); box && box->kind == BoxKind::Spider) {
    b.shape = box->name == "X" ? Shape::XSpider : Shape::ZSpider;
    const Expr* phase = box->phase();
    b.label = phase && !(*phase == Expr(0.0)) ? phase->str() : "";
    if (box->daggered && !b.label.empty()) b.label = "-(" + b.label + ")";
  }
  return b;
}

std::string num(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tex_escape(const std::string& s) {
  static const std::string dagger = "\u2020";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, dagger.size(), dagger) == 0) {
      out += "$^\\dagger$";
      i += dagger.size() - 1;
      continue;
    }
    char c = s[i];
    switch (c) {
      case '_': case '&': case '%': case '$': case '#': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '\\': out += "\\textbackslash{}"; break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      default: out += c;
    }
  }
  return out;
}

double box_center(const BoxPlacement& b) {
  return static_cast<double>(b.column) + (static_cast<double>(b.width) - 1.0) / 2.0;
}

}  // namespace

Layout layout(const Diagram& d) {
  if (auto check = well_typed(d); !check.ok) throw TypeError(check.message);
  Layout out;
  const auto& layers = d.layers();
  const double height = std::max<double>(1.0, static_cast<double>(layers.size()));

  std::vector<OpenWire> open;
  for (std::size_t c = 0; c < d.dom().size(); ++c) {
    open.push_back({d.dom()[c].str(), {{static_cast<double>(c), 0.0}}});
  }
  std::size_t max_cols = std::max<std::size_t>({d.dom().size(), d.cod().size(), 1});

  for (std::size_t row = 0; row < layers.size(); ++row) {
    const Layer& layer = layers[row];
    const double y = static_cast<double>(row);
    const std::size_t l = layer.left.size();
    const std::size_t a = node_dom(layer.node).size();
    const std::size_t b = node_cod(layer.node).size();
    const std::size_t r = layer.right.size();
    BoxPlacement box = place(layer.node, row, l);
    const std::size_t w = box.width;
    max_cols = std::max(max_cols, l + w + r);

    std::vector<OpenWire> next;
    for (std::size_t c = 0; c < l; ++c) {
      open[c].points.push_back({static_cast<double>(c), y + 1.0});
      next.push_back(std::move(open[c]));
    }
    for (std::size_t k = 0; k < a; ++k) {
      auto& wire = open[l + k];
      wire.points.push_back({static_cast<double>(l + k), y + kBoxTop});
      out.wires.push_back(close_wire(std::move(wire)));
    }
    const Ty& cod = node_cod(layer.node);
    for (std::size_t k = 0; k < b; ++k) {
      const double x = static_cast<double>(l + k);
      next.push_back({cod[k].str(), {{x, y + kBoxBottom}, {x, y + 1.0}}});
    }
    for (std::size_t j = 0; j < r; ++j) {
      auto& wire = open[l + a + j];
      const double around = static_cast<double>(l + w + j);
      wire.points.push_back({around, y + kBoxTop});
      wire.points.push_back({around, y + kBoxBottom});
      wire.points.push_back({static_cast<double>(l + b + j), y + 1.0});
      next.push_back(std::move(wire));
    }
    open = std::move(next);
    out.boxes.push_back(std::move(box));
  }
  for (std::size_t c = 0; c < open.size(); ++c) {
    open[c].points.push_back({static_cast<double>(c), height});
    out.wires.push_back(close_wire(std::move(open[c])));
  }
  out.width = static_cast<double>(max_cols);
  out.height = height;
  return out;
}

std::string to_tikz(const Layout& l, double scale) {
  std::string s;
  s += "\\begin{tikzpicture}[x=" + num(scale) + "cm, y=-" + num(scale) + "cm]\n";
  for (const auto& w : l.wires) {
    s += "  \\draw";
    for (std::size_t i = 0; i < w.points.size(); ++i) {
      s += (i ? " -- (" : " (") + num(w.points[i].x) + ", " + num(w.points[i].y) + ")";
    }
    s += ";\n";
  }
  for (const auto& b : l.boxes) {
    const double y = static_cast<double>(b.row) + (kBoxTop + kBoxBottom) / 2.0;
    const double cx = box_center(b);
    if (b.shape == Shape::Rect) {
      const double x0 = static_cast<double>(b.column) - kHalfWidth;
      const double x1 = static_cast<double>(b.column + b.width - 1) + kHalfWidth;
      s += "  \\draw[fill=white] (" + num(x0) + ", " + num(b.row + kBoxTop) + ") rectangle (" +
           num(x1) + ", " + num(b.row + kBoxBottom) + ");\n";
      s += "  \\node at (" + num(cx) + ", " + num(y) + ") {" + tex_escape(b.label) + "};\n";
    } else {
      const char* color = b.shape == Shape::ZSpider ? "green!60" : "red!60";
      s += "  \\node[circle, draw, fill=" + std::string(color) + ", inner sep=2pt] at (" +
           num(cx) + ", " + num(y) + ") {};\n";
      if (!b.label.empty()) {
        s += "  \\node[right] at (" + num(cx + 0.15) + ", " + num(y) + ") {\\scriptsize " +
             tex_escape(b.label) + "};\n";
      }
    }
  }
  s += "\\end{tikzpicture}\n";
  return s;
}

std::string to_svg(const Layout& l, double scale) {
  auto px = [&](double v) { return num((v + kMargin) * scale); };
  const double w = (l.width - 1.0 + 2.0 * kMargin) * scale;
  const double h = (l.height + 2.0 * kMargin) * scale;
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) +
       "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  s += "<g fill=\"none\" stroke=\"black\" stroke-width=\"" + num(scale / 40.0) + "\">\n";
  for (const auto& wire : l.wires) {
    s += "<path d=\"";
    for (std::size_t i = 0; i < wire.points.size(); ++i) {
      s += (i ? " L " : "M ") + px(wire.points[i].x) + " " + px(wire.points[i].y);
    }
    s += "\"><title>" + xml_escape(wire.label) + "</title></path>\n";
  }
  s += "</g>\n";
  const std::string font = num(scale * 0.3);
  for (const auto& b : l.boxes) {
    const double cy = static_cast<double>(b.row) + (kBoxTop + kBoxBottom) / 2.0;
    const double cx = box_center(b);
    if (b.shape == Shape::Rect) {
      const double x0 = static_cast<double>(b.column) - kHalfWidth;
      const double bw = static_cast<double>(b.width - 1) + 2.0 * kHalfWidth;
      s += "<rect x=\"" + px(x0) + "\" y=\"" + px(b.row + kBoxTop) + "\" width=\"" +
           num(bw * scale) + "\" height=\"" + num((kBoxBottom - kBoxTop) * scale) +
           "\" fill=\"white\" stroke=\"black\"/>\n";
      s += "<text x=\"" + px(cx) + "\" y=\"" + px(cy) + "\" font-size=\"" + font +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\">" + xml_escape(b.label) +
           "</text>\n";
    } else {
      const char* fill = b.shape == Shape::ZSpider ? "#99dd99" : "#ff8888";
      s += "<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" + num(0.15 * scale) +
           "\" fill=\"" + fill + "\" stroke=\"black\"/>\n";
      if (!b.label.empty()) {
        s += "<text x=\"" + px(cx + 0.2) + "\" y=\"" + px(cy) + "\" font-size=\"" + font +
             "\" dominant-baseline=\"central\">" + xml_escape(b.label) + "</text>\n";
      }
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace wiregram::render

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

#include "wiregram/zx.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>

#include <nlohmann/json.hpp>

#include "wiregram/errors.hpp"
#include "wiregram/quantum.hpp"

namespace wiregram::zx {

namespace {

using std::numbers::pi;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kInvSqrt2 = 0.70710678118654752440;

Tensor hadamards(std::size_t n) {
  Tensor acc = Tensor::scalar(1.0);
  const Tensor h = gate_tensor(wiregram::H());
  for (std::size_t i = 0; i < n; ++i) acc = t_tensor(acc, h);
  return acc;
}

double normalize_phase(double phase) {
  double r = std::fmod(phase, 2.0);
  if (r < 0) r += 2.0;
  if (r >= 2.0) r -= 2.0;
  return r;
}

}  // namespace

Box spider(Color color, std::size_t legs_in, std::size_t legs_out, const Expr& phase) {
  return Box{color == Color::Z ? "Z" : "X", qubit.pow(legs_in), qubit.pow(legs_out),
             BoxKind::Spider, Phase{phase}, false};
}

bool is_spider(const Box& box) { return box.kind == BoxKind::Spider; }

Color spider_color(const Box& box) {
  if (box.name == "Z") return Color::Z;
  if (box.name == "X") return Color::X;
  throw UnsupportedBox("unknown spider color '" + box.name + "'");
}

Tensor spider_tensor(const Box& box, const Params& params) {
  if (box.daggered) return t_dagger(spider_tensor(box.undaggered(), params));
  const Expr* phase = box.phase();
  const double t = phase ? phase->eval(params) : 0.0;
  const std::size_t n_in = box.dom.size(), n_out = box.cod.size();
  Tensor z = Tensor::zeros(Dim(std::vector<std::size_t>(n_in, 2)),
                           Dim(std::vector<std::size_t>(n_out, 2)));
  auto entries = z.mutable_entries();
  entries.front() += 1.0;
  entries.back() += std::polar(1.0, pi * t);
  if (spider_color(box) == Color::Z) return z;
  return t_then(t_then(hadamards(n_in), z), hadamards(n_out));
}

TensorFunctor functor() {
  TensorFunctor f = quantum_functor();
  f.set_kind_rule(BoxKind::Spider, [](const Box& b, const Params& p) {
    return spider_tensor(b, p);
  });
  return f;
}

Tensor eval(const Diagram& d, const Params& params) {
  static const TensorFunctor f = functor();
  return f(d, params);
}

// ------------------------------------------------------------ circuit2zx

namespace {

Diagram cx_image() {
  return Diagram(scalar(kSqrt2)) *
         ((Diagram(Z(1, 2)) * Id(qubit)) >> (Id(qubit) * X(2, 1)));
}

Diagram translate_box(const Box& box);

Diagram translate_gate(const Box& box) {
  const std::string& n = box.name;
  const auto* p = std::get_if<Phase>(&box.payload);
  if (std::holds_alternative<Entries>(box.payload)) {
    throw UnsupportedBox("custom gate '" + n + "' has no ZX translation");
  }
  if (n == "H") return wiregram::H();
  if (n == "X") return X(1, 1, 1.0);
  if (n == "Z") return Z(1, 1, 1.0);
  if (n == "S") return Z(1, 1, 0.5);
  if (n == "T") return Z(1, 1, 0.25);
  if (n == "Y") return Diagram(scalar(Complex(0.0, 1.0))) * (Diagram(Z(1, 1, 1.0)) >> X(1, 1, 1.0));
  if (n == "CX") return cx_image();
  if (n == "CZ") {
    const Diagram h = Id(qubit) * wiregram::H();
    return h >> cx_image() >> h;
  }
  if (p && n == "Rz") return Diagram(phase_scalar(-p->value)) * Z(1, 1, Expr(2.0) * p->value);
  if (p && n == "Rx") return Diagram(phase_scalar(-p->value)) * X(1, 1, Expr(2.0) * p->value);
  if (p && n == "CRz") {
    const Expr half = Expr(0.5) * p->value;
    const Diagram circuit = (Id(qubit) * Rz(half)) >> CX() >> (Id(qubit) * Rz(-half)) >> CX();
    Diagram out = Diagram::id(qubit.pow(2));
    for (const auto& layer : circuit.layers()) {
      out = out >> translate_box(std::get<Box>(layer.node)).whisker(layer.left, layer.right);
    }
    return out;
  }
  throw UnsupportedBox("gate '" + box.label() + "' has no ZX translation");
}

Diagram basis_image(const std::vector<int>& bits, bool effect) {
  Diagram out = Diagram::id(Ty());
  for (int b : bits) {
    const double phase = b ? 1.0 : 0.0;
    out = out * (Diagram(scalar(kInvSqrt2)) * (effect ? X(1, 0, phase) : X(0, 1, phase)));
  }
  return out;
}

Diagram translate_box(const Box& box) {
  switch (box.kind) {
    case BoxKind::Gate:
      return translate_gate(box);
    case BoxKind::Ket:
      return basis_image(std::get<Bits>(box.payload).values, false);
    case BoxKind::Bra:
      return basis_image(std::get<Bits>(box.payload).values, true);
    case BoxKind::Scalar:
    case BoxKind::Swap:
    case BoxKind::Spider:
      return box;
    default:
      throw UnsupportedBox("box '" + box.label() + "' has no ZX translation");
  }
}

}  // namespace

Diagram circuit2zx(const Diagram& circuit) {
  DiagramFunctor f(
      [](const Ob& ob) {
        if (ob.name != "qubit") {
          throw UnsupportedBox("wire '" + ob.str() + "' has no ZX translation");
        }
        return Ty{ob};
      },
      [](const Box& box) { return translate_box(box); });
  return f(circuit);
}

// ------------------------------------------------------------ graphs

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Input:
      return "in";
    case NodeKind::Output:
      return "out";
    case NodeKind::Z:
      return "Z";
    case NodeKind::X:
      return "X";
    case NodeKind::H:
      return "H";
  }
  return "?";
}

const Node* Graph::find(int id) const {
  for (const auto& node : nodes) {
    if (node.id == id) return &node;
  }
  return nullptr;
}

std::size_t Graph::degree(int id) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges) d += (a == id) + (b == id);
  return d;
}

std::size_t Graph::spider_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) {
    return n.kind == NodeKind::Z || n.kind == NodeKind::X;
  }));
}

void validate(const Graph& g) {
  std::map<int, const Node*> by_id;
  for (const auto& node : g.nodes) {
    if (!by_id.emplace(node.id, &node).second) {
      throw GraphError("duplicate node id " + std::to_string(node.id));
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (int end : {g.edges[e].first, g.edges[e].second}) {
      if (!by_id.count(end)) {
        throw GraphError("edge " + std::to_string(e) + " refers to missing node " +
                         std::to_string(end));
      }
    }
  }
  for (const auto& node : g.nodes) {
    const std::size_t d = g.degree(node.id);
    const bool boundary = node.kind == NodeKind::Input || node.kind == NodeKind::Output;
    if (boundary && d != 1) {
      throw GraphError("boundary node " + std::to_string(node.id) + " has degree " +
                       std::to_string(d) + ", expected 1");
    }
    if (node.kind == NodeKind::H && d != 2) {
      throw GraphError("Hadamard node " + std::to_string(node.id) + " has degree " +
                       std::to_string(d) + ", expected 2");
    }
  }
  auto check_list = [&](const std::vector<int>& ids, NodeKind kind, const char* what) {
    std::set<int> seen;
    for (int id : ids) {
      auto it = by_id.find(id);
      if (it == by_id.end() || it->second->kind != kind) {
        throw GraphError(std::string(what) + " list refers to node " + std::to_string(id) +
                         " which is not an " + std::string(node_kind_name(kind)) + " node");
      }
      if (!seen.insert(id).second) {
        throw GraphError(std::string(what) + " list repeats node " + std::to_string(id));
      }
    }
    for (const auto& node : g.nodes) {
      if (node.kind == kind && !seen.count(node.id)) {
        throw GraphError("node " + std::to_string(node.id) + " is missing from the " +
                         what + " list");
      }
    }
  };
  check_list(g.inputs, NodeKind::Input, "inputs");
  check_list(g.outputs, NodeKind::Output, "outputs");
}

Graph to_graph(const Diagram& d, const Params& params) {
  Graph g;
  int next_id = 0;
  std::vector<int> open;
  auto add_node = [&](NodeKind kind, std::optional<double> phase) {
    g.nodes.push_back(Node{next_id, kind, phase});
    return next_id++;
  };
  for (const auto& ob : d.dom()) {
    if (ob.name != "qubit") throw UnsupportedBox("wire '" + ob.str() + "' is not a qubit");
    const int id = add_node(NodeKind::Input, std::nullopt);
    g.inputs.push_back(id);
    open.push_back(id);
  }
  const TensorFunctor scalars = functor();
  for (std::size_t i = 0; i < d.layers().size(); ++i) {
    const Layer& layer = d.layers()[i];
    const auto* box = std::get_if<Box>(&layer.node);
    if (!box) throw UnsupportedBox("layer " + std::to_string(i) + " holds a bubble");
    const std::size_t offset = layer.left.size();
    if (box->kind == BoxKind::Swap) {
      std::swap(open[offset], open[offset + 1]);
      continue;
    }
    if (box->kind == BoxKind::Scalar) {
      g.scalar *= scalars.box_image(*box, params)(0, 0);
      continue;
    }
    int id = 0;
    if (box->kind == BoxKind::Spider) {
      double phase = box->phase() ? box->phase()->eval(params) : 0.0;
      if (box->daggered) phase = -phase;
      id = add_node(spider_color(*box) == Color::Z ? NodeKind::Z : NodeKind::X,
                    normalize_phase(phase));
    } else if (box->kind == BoxKind::Gate && box->name == "H" &&
               std::holds_alternative<std::monostate>(box->payload)) {
      id = add_node(NodeKind::H, std::nullopt);
    } else {
      throw UnsupportedBox("box '" + box->label() + "' at layer " + std::to_string(i) +
                           " is not a spider, Hadamard, swap or scalar");
    }
    const auto first = open.begin() + static_cast<std::ptrdiff_t>(offset);
    const auto last = first + static_cast<std::ptrdiff_t>(box->dom.size());
    for (auto it = first; it != last; ++it) g.edges.emplace_back(*it, id);
    const auto pos = open.erase(first, last);
    open.insert(pos, box->cod.size(), id);
  }
  for (int end : open) {
    const int id = add_node(NodeKind::Output, std::nullopt);
    g.outputs.push_back(id);
    g.edges.emplace_back(end, id);
  }
  return g;
}

namespace {

// Incrementally builds a diagram over qubit wires, each open wire labelled
// by the graph edge it carries.
class WireBuilder {
 public:
  explicit WireBuilder(std::vector<int> wires)
      : wires_(std::move(wires)), diagram_(Diagram::id(qubit.pow(wires_.size()))) {}

  // Moves the wires carrying `edges` (in that order) to the right end.
  void gather(const std::vector<int>& edges) {
    std::vector<bool> taken(wires_.size(), false);
    std::vector<std::size_t> picked;
    for (int e : edges) {
      bool found = false;
      for (std::size_t k = 0; k < wires_.size(); ++k) {
        if (!taken[k] && wires_[k] == e) {
          taken[k] = true;
          picked.push_back(k);
          found = true;
          break;
        }
      }
      if (!found) throw GraphError("edge " + std::to_string(e) + " is not an open wire");
    }
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < wires_.size(); ++k) {
      if (!taken[k]) order.push_back(k);
    }
    order.insert(order.end(), picked.begin(), picked.end());
    reorder(order);
  }

  void reorder(const std::vector<std::size_t>& order) {
    diagram_ = diagram_ >> permutation(qubit.pow(wires_.size()), order);
    std::vector<int> next;
    for (auto k : order) next.push_back(wires_[k]);
    wires_ = std::move(next);
  }

  // Applies `box` to the rightmost `box.dom.size()` wires.
  void apply(const Diagram& box, const std::vector<int>& new_edges) {
    const std::size_t k = box.dom().size();
    const std::size_t rest = wires_.size() - k;
    diagram_ = diagram_ >> box.whisker(qubit.pow(rest), Ty());
    wires_.resize(rest);
    wires_.insert(wires_.end(), new_edges.begin(), new_edges.end());
  }

  const std::vector<int>& wires() const { return wires_; }
  const Diagram& diagram() const { return diagram_; }

 private:
  std::vector<int> wires_;
  Diagram diagram_;
};

}  // namespace

Diagram from_graph(const Graph& g) {
  validate(g);
  std::map<int, const Node*> by_id;
  std::map<int, std::vector<int>> incident;
  for (const auto& node : g.nodes) by_id[node.id] = &node;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].first].push_back(static_cast<int>(e));
    if (g.edges[e].second != g.edges[e].first) {
      incident[g.edges[e].second].push_back(static_cast<int>(e));
    }
  }
  auto other_end = [&](int e, int id) {
    const auto& [a, b] = g.edges[static_cast<std::size_t>(e)];
    return a == id ? b : a;
  };
  auto kind_of = [&](int id) { return by_id.at(id)->kind; };

  std::vector<int> initial;
  for (int id : g.inputs) initial.push_back(incident[id].front());
  WireBuilder builder(initial);

  // Edges joining two inputs are closed with a cap.
  std::set<int> closed;
  for (int id : g.inputs) {
    const int e = incident[id].front();
    if (kind_of(other_end(e, id)) == NodeKind::Input && !closed.count(e)) {
      closed.insert(e);
      builder.gather({e, e});
      builder.apply(Z(2, 0), {});
    }
  }

  // Visit inner nodes breadth-first from the inputs, then any leftovers.
  std::vector<int> order;
  std::set<int> queued;
  std::deque<int> frontier(g.inputs.begin(), g.inputs.end());
  for (int id : g.inputs) queued.insert(id);
  while (!frontier.empty()) {
    const int id = frontier.front();
    frontier.pop_front();
    const NodeKind k = kind_of(id);
    if (k != NodeKind::Input && k != NodeKind::Output) order.push_back(id);
    for (int e : incident[id]) {
      const int next = other_end(e, id);
      if (queued.insert(next).second) frontier.push_back(next);
    }
  }
  for (const auto& node : g.nodes) {
    if (!queued.count(node.id) && node.kind != NodeKind::Input &&
        node.kind != NodeKind::Output) {
      order.push_back(node.id);
    }
  }

  std::set<int> done(g.inputs.begin(), g.inputs.end());
  for (int id : order) {
    const Node& node = *by_id.at(id);
    std::vector<int> ins, outs;
    bool self_loop = false;
    for (int e : incident[id]) {
      const int next = other_end(e, id);
      if (next == id) {
        self_loop = true;
      } else if (done.count(next)) {
        ins.push_back(e);
      } else {
        outs.push_back(e);
      }
    }
    builder.gather(ins);
    if (node.kind == NodeKind::H) {
      if (self_loop) throw GraphError("Hadamard node " + std::to_string(id) + " is a self-loop");
      const Diagram h = wiregram::H();
      Diagram image = h;
      if (ins.size() == 2) image = (h * Id(qubit)) >> Z(2, 0);
      if (outs.size() == 2) image = Diagram(Z(0, 2)) >> (h * Id(qubit));
      builder.apply(image, outs);
    } else {
      // A plain self-loop on a spider contracts two equal legs away, which
      // leaves the spider unchanged on its remaining legs.
      const Color color = node.kind == NodeKind::Z ? Color::Z : Color::X;
      builder.apply(spider(color, ins.size(), outs.size(), node.phase.value_or(0.0)), outs);
    }
    done.insert(id);
  }

  // Edges joining two outputs are opened with a cup.
  for (int id : g.outputs) {
    const int e = incident[id].front();
    if (kind_of(other_end(e, id)) == NodeKind::Output && !closed.count(e)) {
      closed.insert(e);
      builder.apply(Z(0, 2), {e, e});
    }
  }

  std::vector<int> targets;
  for (int id : g.outputs) targets.push_back(incident[id].front());
  std::vector<bool> taken(builder.wires().size(), false);
  std::vector<std::size_t> final_order;
  for (int e : targets) {
    for (std::size_t k = 0; k < builder.wires().size(); ++k) {
      if (!taken[k] && builder.wires()[k] == e) {
        taken[k] = true;
        final_order.push_back(k);
        break;
      }
    }
  }
  if (final_order.size() != builder.wires().size()) {
    throw GraphError("graph does not connect its outputs consistently");
  }
  builder.reorder(final_order);
  Diagram out = builder.diagram();
  if (g.scalar != Complex(1.0)) out = Diagram(scalar(g.scalar)) * out;
  return out;
}

Graph fuse_spiders(const Graph& g) {
  Graph out = g;
  auto is_spider_kind = [](NodeKind k) { return k == NodeKind::Z || k == NodeKind::X; };
  while (true) {
    std::map<int, Node*> by_id;
    for (auto& node : out.nodes) by_id[node.id] = &node;
    auto candidate = std::find_if(out.edges.begin(), out.edges.end(), [&](const auto& e) {
      if (e.first == e.second) return false;
      const Node* a = by_id.at(e.first);
      const Node* b = by_id.at(e.second);
      return is_spider_kind(a->kind) && a->kind == b->kind;
    });
    if (candidate == out.edges.end()) break;
    const int keep = candidate->first;
    const int gone = candidate->second;
    Node* kept = by_id.at(keep);
    kept->phase = normalize_phase(kept->phase.value_or(0.0) +
                                  by_id.at(gone)->phase.value_or(0.0));
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : out.edges) {
      if (a == gone) a = keep;
      if (b == gone) b = keep;
      // Loops on a spider are dropped: contracting two of its legs leaves it
      // unchanged on the rest.
      if (a == keep && b == keep) continue;
      edges.emplace_back(a, b);
    }
    out.edges = std::move(edges);
    std::erase_if(out.nodes, [gone](const Node& n) { return n.id == gone; });
  }
  return out;
}

// ------------------------------------------------------------ JSON

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& node : g.nodes) {
    nlohmann::ordered_json n;
    n["id"] = node.id;
    n["kind"] = std::string(node_kind_name(node.kind));
    n["phase"] = node.phase ? nlohmann::ordered_json(*node.phase) : nlohmann::ordered_json();
    doc["nodes"].push_back(n);
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges) doc["edges"].push_back({a, b});
  doc["inputs"] = g.inputs;
  doc["outputs"] = g.outputs;
  doc["scalar"] = {g.scalar.real(), g.scalar.imag()};
  return doc.dump(2) + "\n";
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "graph must be an object");
  auto require_array = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key) || !doc[key].is_array()) {
      throw SchemaError(std::string("/") + key, "missing array");
    }
    return doc[key];
  };
  Graph g;
  const auto& nodes = require_array("nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "/nodes/" + std::to_string(i);
    const auto& n = nodes[i];
    if (!n.is_object() || !n.contains("id") || !n["id"].is_number_integer()) {
      throw SchemaError(path + "/id", "expected an integer id");
    }
    if (!n.contains("kind") || !n["kind"].is_string()) {
      throw SchemaError(path + "/kind", "expected a string");
    }
    Node node;
    node.id = n["id"].get<int>();
    const std::string kind = n["kind"].get<std::string>();
    if (kind == "in") {
      node.kind = NodeKind::Input;
    } else if (kind == "out") {
      node.kind = NodeKind::Output;
    } else if (kind == "Z") {
      node.kind = NodeKind::Z;
    } else if (kind == "X") {
      node.kind = NodeKind::X;
    } else if (kind == "H") {
      node.kind = NodeKind::H;
    } else {
      throw SchemaError(path + "/kind", "unknown node kind '" + kind + "'");
    }
    if (n.contains("phase") && !n["phase"].is_null()) {
      if (!n["phase"].is_number()) throw SchemaError(path + "/phase", "expected a number or null");
      node.phase = n["phase"].get<double>();
    } else if (node.kind == NodeKind::Z || node.kind == NodeKind::X) {
      node.phase = 0.0;
    }
    g.nodes.push_back(node);
  }
  const auto& edges = require_array("edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw SchemaError("/edges/" + std::to_string(i), "expected a pair of node ids");
    }
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  for (const char* key : {"inputs", "outputs"}) {
    const auto& ids = require_array(key);
    auto& target = std::string(key) == "inputs" ? g.inputs : g.outputs;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!ids[i].is_number_integer()) {
        throw SchemaError(std::string("/") + key + "/" + std::to_string(i), "expected a node id");
      }
      target.push_back(ids[i].get<int>());
    }
  }
  if (doc.contains("scalar")) {
    const auto& s = doc["scalar"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number()) {
      throw SchemaError("/scalar", "expected [re, im]");
    }
    g.scalar = Complex(s[0].get<double>(), s[1].get<double>());
  }
  validate(g);
  return g;
}

}  // namespace wiregram::zx

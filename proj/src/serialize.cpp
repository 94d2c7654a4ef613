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

#include "wiregram/serialize.hpp"

#include "wiregram/errors.hpp"

namespace wiregram::io {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

namespace {

ojson ob_to_json(const Ob& ob) {
  if (ob.dim == 0) return ob.name;
  return ojson{{"name", ob.name}, {"dim", ob.dim}};
}

ojson ty_to_json(const Ty& ty) {
  ojson out = ojson::array();
  for (const auto& ob : ty) out.push_back(ob_to_json(ob));
  return out;
}

ojson complex_to_json(Complex c) { return ojson::array({c.real(), c.imag()}); }

ojson payload_to_json(const Payload& payload) {
  return std::visit(
      [](const auto& p) -> ojson {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<P, Phase>) {
          return ojson{{"phase", expr_to_json(p.value)}};
        } else if constexpr (std::is_same_v<P, Entries>) {
          ojson values = ojson::array();
          for (auto c : p.values) values.push_back(complex_to_json(c));
          return ojson{{"entries", values}};
        } else if constexpr (std::is_same_v<P, Bits>) {
          return ojson{{"bits", p.values}};
        } else {
          return ojson{{"scalar", complex_to_json(p.coeff)},
                       {"factor", expr_to_json(p.factor)}};
        }
      },
      payload);
}

ojson layers_to_json(const Diagram& d);

ojson node_to_json(const Node& node) {
  if (const auto* box = std::get_if<Box>(&node)) {
    ojson out;
    out["name"] = box->name;
    out["dom"] = ty_to_json(box->dom);
    out["cod"] = ty_to_json(box->cod);
    out["kind"] = std::string(box_kind_name(box->kind));
    out["payload"] = payload_to_json(box->payload);
    out["dagger"] = box->daggered;
    return out;
  }
  const auto& bubble = std::get<Bubble>(node);
  ojson out;
  out["name"] = std::string(scalar_fn_name(bubble.fn));
  out["dom"] = ty_to_json(bubble.dom());
  out["cod"] = ty_to_json(bubble.cod());
  out["kind"] = "bubble";
  ojson inner;
  inner["dom"] = ty_to_json(bubble.inner->dom());
  inner["cod"] = ty_to_json(bubble.inner->cod());
  inner["layers"] = layers_to_json(*bubble.inner);
  out["payload"] = ojson{{"function", scalar_fn_name(bubble.fn)}, {"inner", inner}};
  out["dagger"] = false;
  return out;
}

ojson layers_to_json(const Diagram& d) {
  ojson layers = ojson::array();
  for (const auto& layer : d.layers()) {
    ojson l;
    l["left"] = ty_to_json(layer.left);
    l["box"] = node_to_json(layer.node);
    l["right"] = ty_to_json(layer.right);
    layers.push_back(l);
  }
  return layers;
}

// ---------------------------------------------------------------- decoding

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw SchemaError(path, message);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

Ob ob_from_json(const json& j, const std::string& path) {
  if (j.is_string()) return Ob{j.get<std::string>(), 0};
  if (j.is_object()) {
    const json& name = field(j, "name", path);
    const json& dim = field(j, "dim", path);
    if (!name.is_string()) fail(path + "/name", "expected a string");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
      fail(path + "/dim", "expected a positive integer");
    }
    return Ob{name.get<std::string>(), dim.get<std::size_t>()};
  }
  fail(path, "expected a wire label");
}

Ty ty_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of wire labels");
  std::vector<Ob> obs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    obs.push_back(ob_from_json(j[i], path + "/" + std::to_string(i)));
  }
  return Ty(std::move(obs));
}

Complex complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(path, "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Payload payload_from_json(const json& j, const std::string& path) {
  if (j.is_null()) return std::monostate{};
  if (!j.is_object()) fail(path, "expected null or an object");
  if (j.contains("phase")) return Phase{expr_from_json(j["phase"], path + "/phase")};
  if (j.contains("entries")) {
    const json& values = j["entries"];
    if (!values.is_array()) fail(path + "/entries", "expected an array");
    Entries out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      out.values.push_back(
          complex_from_json(values[i], path + "/entries/" + std::to_string(i)));
    }
    return out;
  }
  if (j.contains("bits")) {
    const json& values = j["bits"];
    if (!values.is_array()) fail(path + "/bits", "expected an array");
    Bits out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i].is_number_integer()) {
        fail(path + "/bits/" + std::to_string(i), "expected an integer");
      }
      out.values.push_back(values[i].get<int>());
    }
    return out;
  }
  if (j.contains("scalar")) {
    ScalarValue out;
    out.coeff = complex_from_json(j["scalar"], path + "/scalar");
    if (j.contains("factor")) out.factor = expr_from_json(j["factor"], path + "/factor");
    return out;
  }
  fail(path, "unrecognised payload");
}

std::vector<Layer> layers_from_json(const json& j, const std::string& path);

Node node_from_json(const json& j, const std::string& path) {
  const json& kind_json = field(j, "kind", path);
  if (!kind_json.is_string()) fail(path + "/kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  const Ty dom = ty_from_json(field(j, "dom", path), path + "/dom");
  const Ty cod = ty_from_json(field(j, "cod", path), path + "/cod");
  if (kind == "bubble") {
    const json& payload = field(j, "payload", path);
    const json& fn = field(payload, "function", path + "/payload");
    if (!fn.is_string()) fail(path + "/payload/function", "expected a string");
    ScalarFn function;
    try {
      function = parse_scalar_fn(fn.get<std::string>());
    } catch (const Error& e) {
      fail(path + "/payload/function", e.what());
    }
    const std::string inner_path = path + "/payload/inner";
    const json& inner = field(payload, "inner", path + "/payload");
    Diagram diagram(ty_from_json(field(inner, "dom", inner_path), inner_path + "/dom"),
                    ty_from_json(field(inner, "cod", inner_path), inner_path + "/cod"),
                    layers_from_json(field(inner, "layers", inner_path), inner_path + "/layers"));
    if (diagram.dom() != dom || diagram.cod() != cod) {
      fail(path, "bubble boundaries do not match its inner diagram");
    }
    return Bubble(std::move(diagram), function);
  }
  Box box;
  try {
    box.kind = parse_box_kind(kind);
  } catch (const Error& e) {
    fail(path + "/kind", e.what());
  }
  const json& name = field(j, "name", path);
  if (!name.is_string()) fail(path + "/name", "expected a string");
  box.name = name.get<std::string>();
  box.dom = dom;
  box.cod = cod;
  box.payload = j.contains("payload") ? payload_from_json(j["payload"], path + "/payload")
                                      : Payload{};
  if (j.contains("dagger")) {
    if (!j["dagger"].is_boolean()) fail(path + "/dagger", "expected a boolean");
    box.daggered = j["dagger"].get<bool>();
  }
  if ((box.kind == BoxKind::Ket || box.kind == BoxKind::Bra) &&
      !std::holds_alternative<Bits>(box.payload)) {
    fail(path + "/payload", "kets and bras carry bits");
  }
  if (box.kind == BoxKind::Swap && box.dom.size() != 2) {
    fail(path + "/dom", "a swap acts on exactly two wires");
  }
  return box;
}

std::vector<Layer> layers_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of layers");
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string lp = path + "/" + std::to_string(i);
    layers.push_back(Layer{ty_from_json(field(j[i], "left", lp), lp + "/left"),
                           node_from_json(field(j[i], "box", lp), lp + "/box"),
                           ty_from_json(field(j[i], "right", lp), lp + "/right")});
  }
  return layers;
}

void require_typed(const Diagram& d, const std::string& where) {
  if (auto check = well_typed(d); !check) {
    throw TypeError(where + "layer " + std::to_string(check.layer) + ": " + check.message);
  }
}

}  // namespace

ojson expr_to_json(const Expr& e) {
  switch (e.op()) {
    case Expr::Op::Const:
      return e.value();
    case Expr::Op::Var:
      return ojson{{"var", e.name()}};
    case Expr::Op::Add:
    case Expr::Op::Mul: {
      ojson args = ojson::array();
      for (const auto& a : e.args()) args.push_back(expr_to_json(a));
      return ojson{{e.op() == Expr::Op::Add ? "add" : "mul", args}};
    }
    case Expr::Op::Neg:
      return ojson{{"neg", expr_to_json(e.args()[0])}};
  }
  return nullptr;
}

Expr expr_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return Expr(j.get<double>());
  if (!j.is_object() || j.size() != 1) fail(path, "expected a number or an expression");
  const auto& [key, value] = *j.items().begin();
  if (key == "var") {
    if (!value.is_string()) fail(path + "/var", "expected a variable name");
    return Expr::var(value.get<std::string>());
  }
  if (key == "neg") return -expr_from_json(value, path + "/neg");
  if (key == "add" || key == "mul") {
    if (!value.is_array()) fail(path + "/" + key, "expected an array");
    std::vector<Expr> args;
    for (std::size_t i = 0; i < value.size(); ++i) {
      args.push_back(expr_from_json(value[i], path + "/" + key + "/" + std::to_string(i)));
    }
    return key == "add" ? Expr::sum(std::move(args)) : Expr::product(std::move(args));
  }
  fail(path, "unknown expression '" + key + "'");
}

ojson diagram_to_json(const Diagram& d) {
  ojson out;
  out["version"] = kDocumentVersion;
  out["dom"] = ty_to_json(d.dom());
  out["cod"] = ty_to_json(d.cod());
  out["layers"] = layers_to_json(d);
  return out;
}

ojson document_to_json(const Document& doc) {
  if (const auto* d = std::get_if<Diagram>(&doc)) return diagram_to_json(*d);
  const auto& s = std::get<Sum>(doc);
  ojson out;
  out["version"] = kDocumentVersion;
  out["dom"] = ty_to_json(s.dom());
  out["cod"] = ty_to_json(s.cod());
  out["terms"] = ojson::array();
  for (const auto& term : s.terms()) out["terms"].push_back(ojson{{"layers", layers_to_json(term)}});
  return out;
}

std::string encode_doc(const Diagram& d) { return diagram_to_json(d).dump(2) + "\n"; }
std::string encode_doc(const Sum& s) { return document_to_json(Document(s)).dump(2) + "\n"; }
std::string encode_doc(const Document& doc) { return document_to_json(doc).dump(2) + "\n"; }

Document decode_doc(std::string_view text, bool check_types) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("invalid JSON: ") + e.what());
  }
  const json& version = field(doc, "version", "");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion) {
    fail("/version", "unsupported version (expected " + std::to_string(kDocumentVersion) + ")");
  }
  const Ty dom = ty_from_json(field(doc, "dom", ""), "/dom");
  const Ty cod = ty_from_json(field(doc, "cod", ""), "/cod");
  if (doc.contains("terms")) {
    const json& terms = doc["terms"];
    if (!terms.is_array()) fail("/terms", "expected an array");
    std::vector<Diagram> diagrams;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string path = "/terms/" + std::to_string(i);
      Diagram term(dom, cod, layers_from_json(field(terms[i], "layers", path), path + "/layers"));
      if (check_types) require_typed(term, "term " + std::to_string(i) + ", ");
      diagrams.push_back(std::move(term));
    }
    return Sum(dom, cod, std::move(diagrams));
  }
  Diagram d(dom, cod, layers_from_json(field(doc, "layers", ""), "/layers"));
  if (check_types) require_typed(d, "");
  return d;
}

}  // namespace wiregram::io

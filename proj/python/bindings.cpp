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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wiregram/autodiff.hpp"
#include "wiregram/channel.hpp"
#include "wiregram/cli.hpp"
#include "wiregram/errors.hpp"
#include "wiregram/quantum.hpp"
#include "wiregram/render.hpp"
#include "wiregram/serialize.hpp"
#include "wiregram/zx.hpp"

namespace py = pybind11;
using namespace wiregram;

namespace {

py::dict tensor_dict(const Tensor& t, const std::string& semantics) {
  py::dict out;
  out["semantics"] = semantics;
  out["dom"] = std::vector<std::size_t>(t.dom().dims().begin(), t.dom().dims().end());
  out["cod"] = std::vector<std::size_t>(t.cod().dims().begin(), t.cod().dims().end());
  out["entries"] = std::vector<Complex>(t.entries().begin(), t.entries().end());
  return out;
}

const Diagram& single(const io::Document& doc) {
  if (const auto* d = std::get_if<Diagram>(&doc)) return *d;
  throw SemanticsError("expected a single diagram, not a formal sum");
}

py::dict evaluate(const std::string& text, const Params& params, const std::string& semantics) {
  const auto doc = io::decode_doc(text);
  std::string mode = semantics;
  if (mode == "auto") {
    const auto* d = std::get_if<Diagram>(&doc);
    mode = d && is_mixed(*d) ? "channel" : "pure";
  }
  if (mode == "pure") {
    return tensor_dict(std::visit([&](const auto& d) { return eval_pure(d, params); }, doc), mode);
  }
  if (mode == "channel") return tensor_dict(eval_channel(single(doc), params).tensor(), mode);
  throw py::value_error("semantics must be auto, pure or channel");
}

}  // namespace

PYBIND11_MODULE(wiregram, m) {
  m.doc() = "Typed string diagrams: evaluation, differentiation, ZX and drawing.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<SchemaError>(m, "SchemaError", error.ptr());
  py::register_exception<TypeError>(m, "DiagramTypeError", error.ptr());
  py::register_exception<UnboundVariable>(m, "UnboundVariable", error.ptr());
  py::register_exception<SemanticsError>(m, "SemanticsError", error.ptr());
  py::register_exception<UnsupportedBox>(m, "UnsupportedBox", error.ptr());
  py::register_exception<GraphError>(m, "GraphError", error.ptr());

  m.def("teleportation", [] { return io::encode_doc(teleportation()); },
        "The teleportation protocol as a JSON document.");
  m.def("bell_state", [] { return io::encode_doc(bell_state()); });
  m.def(
      "check",
      [](const std::string& text) {
        try {
          io::decode_doc(text);
          return py::make_tuple(true, std::string());
        } catch (const TypeError& e) {
          return py::make_tuple(false, std::string(e.what()));
        }
      },
      py::arg("document"), "Type-check a document; raises SchemaError when malformed.");
  m.def("evaluate", &evaluate, py::arg("document"), py::arg("params") = Params{},
        py::arg("semantics") = "auto");
  m.def(
      "gradient",
      [](const std::string& text, const std::string& var) {
        const auto doc = io::decode_doc(text);
        return io::encode_doc(std::visit([&](const auto& d) { return diagram_grad(d, var); }, doc));
      },
      py::arg("document"), py::arg("var"));
  m.def(
      "zx_convert",
      [](const std::string& text, const Params& params) {
        const Diagram zxd = zx::circuit2zx(single(io::decode_doc(text)));
        return zx::graph_to_json(zx::to_graph(zxd, params));
      },
      py::arg("document"), py::arg("params") = Params{});
  m.def(
      "zx_simplify",
      [](const std::string& graph) {
        return zx::graph_to_json(zx::fuse_spiders(zx::graph_from_json(graph)));
      },
      py::arg("graph"));
  m.def(
      "zx_evaluate",
      [](const std::string& graph) {
        return tensor_dict(zx::eval(zx::from_graph(zx::graph_from_json(graph))), "zx");
      },
      py::arg("graph"));
  m.def(
      "draw",
      [](const std::string& text, const std::string& format, std::optional<double> scale) {
        const auto l = render::layout(single(io::decode_doc(text)));
        if (format == "tikz") return render::to_tikz(l, scale.value_or(1.0));
        if (format == "svg") return render::to_svg(l, scale.value_or(40.0));
        throw py::value_error("format must be tikz or svg");
      },
      py::arg("document"), py::arg("format") = "svg", py::arg("scale") = py::none());
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "",
      "Run one command line in-process; returns (exit_code, stdout, stderr).");
}

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

#include "wiregram/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "wiregram/autodiff.hpp"
#include "wiregram/channel.hpp"
#include "wiregram/errors.hpp"
#include "wiregram/quantum.hpp"
#include "wiregram/render.hpp"
#include "wiregram/serialize.hpp"
#include "wiregram/zx.hpp"

namespace wiregram::cli {

namespace {

using ojson = nlohmann::ordered_json;

class FileMissing : public Error {
 public:
  using Error::Error;
};

class Usage : public Error {
 public:
  using Error::Error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw FileMissing("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FileMissing("cannot write '" + path + "'");
  file << text;
}

Params parse_params(const std::vector<std::string>& raw) {
  Params params;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Usage("--param expects NAME=VALUE, got '" + item + "'");
    }
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw Usage("--param value for '" + item.substr(0, eq) + "' is not a number");
    }
    params[item.substr(0, eq)] = v;
  }
  return params;
}

ojson tensor_to_json(const Tensor& t, std::string_view semantics, double tolerance) {
  auto chop = [&](double v) { return std::abs(v) <= tolerance ? 0.0 : v; };
  ojson doc;
  doc["semantics"] = semantics;
  doc["dom"] = std::vector<std::size_t>(t.dom().dims().begin(), t.dom().dims().end());
  doc["cod"] = std::vector<std::size_t>(t.cod().dims().begin(), t.cod().dims().end());
  ojson entries = ojson::array();
  for (const auto& c : t.entries()) entries.push_back({chop(c.real()), chop(c.imag())});
  doc["entries"] = std::move(entries);
  return doc;
}

const Diagram& require_diagram(const io::Document& doc, std::string_view what) {
  if (const auto* d = std::get_if<Diagram>(&doc)) return *d;
  throw SemanticsError(std::string(what) + " needs a single diagram, not a formal sum");
}

// ------------------------------------------------------------ subcommands

struct EvalOptions {
  std::string file;
  std::vector<std::string> params;
  std::string semantics = "auto";
  double tolerance = 1e-12;
  std::string output;
};

int do_check(const std::string& file, Io io) {
  const std::string text = read_input(file, io.in);
  const auto doc = io::decode_doc(text);
  std::visit([&](const auto& d) {
    io.out << "ok: " << d.dom().str() << " -> " << d.cod().str() << "\n";
  }, doc);
  return kOk;
}

int do_eval(const EvalOptions& o, Io io) {
  const auto doc = io::decode_doc(read_input(o.file, io.in));
  const Params params = parse_params(o.params);
  std::string semantics = o.semantics;
  if (semantics == "auto") {
    const auto* d = std::get_if<Diagram>(&doc);
    semantics = d && is_mixed(*d) ? "channel" : "pure";
  }
  Tensor result;
  if (semantics == "pure") {
    result = std::visit([&](const auto& d) { return eval_pure(d, params); }, doc);
  } else {
    result = eval_channel(require_diagram(doc, "channel semantics"), params).tensor();
  }
  write_output(o.output, tensor_to_json(result, semantics, o.tolerance).dump(2) + "\n",
               io.out);
  return kOk;
}

struct GradOptions {
  std::string file;
  std::string var;
  std::optional<double> at;
  std::vector<std::string> params;
  double tolerance = 1e-12;
  std::string output;
};

int do_grad(const GradOptions& o, Io io) {
  const auto doc = io::decode_doc(read_input(o.file, io.in));
  const Sum grad = std::visit([&](const auto& d) { return diagram_grad(d, o.var); }, doc);
  if (!o.at) {
    write_output(o.output, io::encode_doc(grad), io.out);
    return kOk;
  }
  Params params = parse_params(o.params);
  params[o.var] = *o.at;
  const Tensor value = eval_pure(grad, params);
  write_output(o.output, tensor_to_json(value, "pure", o.tolerance).dump(2) + "\n", io.out);
  return kOk;
}

int do_zx_convert(const std::string& file, const std::vector<std::string>& raw_params,
                  const std::string& output, Io io) {
  const auto doc = io::decode_doc(read_input(file, io.in));
  const Diagram zx = zx::circuit2zx(require_diagram(doc, "zx convert"));
  write_output(output, zx::graph_to_json(zx::to_graph(zx, parse_params(raw_params))), io.out);
  return kOk;
}

int do_zx_simplify(const std::string& file, const std::string& output, Io io) {
  const zx::Graph g = zx::graph_from_json(read_input(file, io.in));
  write_output(output, zx::graph_to_json(zx::fuse_spiders(g)), io.out);
  return kOk;
}

int do_zx_eval(const std::string& file, double tolerance, const std::string& output, Io io) {
  const zx::Graph g = zx::graph_from_json(read_input(file, io.in));
  const Tensor t = zx::eval(zx::from_graph(g));
  write_output(output, tensor_to_json(t, "zx", tolerance).dump(2) + "\n", io.out);
  return kOk;
}

int do_draw(const std::string& file, const std::string& format, std::optional<double> scale,
            const std::string& output, Io io) {
  const auto doc = io::decode_doc(read_input(file, io.in));
  const auto l = render::layout(require_diagram(doc, "draw"));
  const std::string text = format == "svg" ? render::to_svg(l, scale.value_or(40.0))
                                           : render::to_tikz(l, scale.value_or(1.0));
  write_output(output, text, io.out);
  return kOk;
}

int do_example(const std::string& name, const std::string& output, Io io) {
  if (name != "teleportation" && name != "bell") {
    throw Usage("unknown example '" + name + "' (expected teleportation or bell)");
  }
  const Diagram d = name == "bell" ? bell_state() : teleportation();
  write_output(output, io::encode_doc(d), io.out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Typed string diagrams: evaluation, differentiation, ZX and drawing.",
               "wiregram"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Exit 0 iff FILE is a well-typed document");
  check->add_option("FILE", check_file, "Document, or - for standard input");

  EvalOptions eval_opts;
  auto* eval = app.add_subcommand("eval", "Evaluate a document to a tensor");
  eval->add_option("FILE", eval_opts.file, "Document, or - for standard input");
  eval->add_option("--param", eval_opts.params, "Parameter binding NAME=VALUE");
  eval->add_option("--semantics", eval_opts.semantics, "pure, channel or auto")
      ->check(CLI::IsMember({"auto", "pure", "channel"}));
  eval->add_option("--tolerance", eval_opts.tolerance,
                   "Components of magnitude at most T are written as 0");
  eval->add_option("-o,--output", eval_opts.output, "Output file");

  GradOptions grad_opts;
  auto* grad = app.add_subcommand("grad", "Differentiate a document");
  grad->add_option("FILE", grad_opts.file, "Document, or - for standard input");
  grad->add_option("--var", grad_opts.var, "Variable to differentiate by")->required();
  grad->add_option("--at", grad_opts.at, "Evaluate the derivative at this value");
  grad->add_option("--param", grad_opts.params, "Other parameter bindings NAME=VALUE");
  grad->add_option("--tolerance", grad_opts.tolerance, "Chop threshold for --at output");
  grad->add_option("-o,--output", grad_opts.output, "Output file");

  auto* zx_cmd = app.add_subcommand("zx", "ZX-calculus graphs");
  zx_cmd->require_subcommand(1);
  std::string zx_file, zx_output;
  std::vector<std::string> zx_params;
  double zx_tolerance = 1e-12;
  auto* zx_convert = zx_cmd->add_subcommand("convert", "Translate a circuit to a graph");
  zx_convert->add_option("FILE", zx_file, "Document, or - for standard input");
  zx_convert->add_option("--param", zx_params, "Parameter binding NAME=VALUE");
  zx_convert->add_option("-o,--output", zx_output, "Output graph file");
  auto* zx_simplify = zx_cmd->add_subcommand("simplify", "Fuse adjacent spiders");
  zx_simplify->add_option("GRAPH", zx_file, "Graph, or - for standard input");
  zx_simplify->add_option("-o,--output", zx_output, "Output graph file");
  auto* zx_eval = zx_cmd->add_subcommand("eval", "Evaluate a graph to a tensor");
  zx_eval->add_option("GRAPH", zx_file, "Graph, or - for standard input");
  zx_eval->add_option("--tolerance", zx_tolerance, "Chop threshold");
  zx_eval->add_option("-o,--output", zx_output, "Output file");

  std::string draw_file, draw_format = "svg", draw_output;
  std::optional<double> draw_scale;
  auto* draw = app.add_subcommand("draw", "Render a diagram to TikZ or SVG");
  draw->add_option("FILE", draw_file, "Document, or - for standard input");
  draw->add_option("--format", draw_format, "tikz or svg")
      ->check(CLI::IsMember({"tikz", "svg"}));
  draw->add_option("--scale", draw_scale, "Size of one grid cell (cm for TikZ, px for SVG)")
      ->check(CLI::PositiveNumber);
  draw->add_option("-o,--output", draw_output, "Output file");

  std::string example_name, example_output;
  auto* example = app.add_subcommand("example", "Emit a built-in example document");
  example->add_option("NAME", example_name, "teleportation or bell")->required();
  example->add_option("-o,--output", example_output, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  const Io io{in, out};
  try {
    if (check->parsed()) {
      try {
        return do_check(check_file, io);
      } catch (const TypeError& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
      }
    }
    if (eval->parsed()) return do_eval(eval_opts, io);
    if (grad->parsed()) return do_grad(grad_opts, io);
    if (zx_convert->parsed()) return do_zx_convert(zx_file, zx_params, zx_output, io);
    if (zx_simplify->parsed()) return do_zx_simplify(zx_file, zx_output, io);
    if (zx_eval->parsed()) return do_zx_eval(zx_file, zx_tolerance, zx_output, io);
    if (draw->parsed()) return do_draw(draw_file, draw_format, draw_scale, draw_output, io);
    if (example->parsed()) return do_example(example_name, example_output, io);
  } catch (const FileMissing& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const UnboundVariable& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const TypeError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kInvalid;
}

}  // namespace wiregram::cli

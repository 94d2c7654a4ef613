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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wiregram/cli.hpp"
#include "wiregram/quantum.hpp"
#include "wiregram/serialize.hpp"
#include "wiregram/zx.hpp"

using namespace wiregram;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("wiregram_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const fs::path p = path_ / name;
    if (!content.empty()) std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::complex<double>> entries(const std::string& text) {
  std::vector<std::complex<double>> out;
  const json doc = json::parse(text);
  for (const auto& e : doc.at("entries")) out.emplace_back(e[0].get<double>(), e[1].get<double>());
  return out;
}

}  // namespace

TEST_CASE("example teleportation piped into eval") {
  const Result doc = run({"example", "teleportation"});
  REQUIRE(doc.code == 0);
  const Result ev = run({"eval", "-"}, doc.out);
  REQUIRE(ev.code == 0);
  const json j = json::parse(ev.out);
  CHECK(j["semantics"] == "pure");
  CHECK(j["dom"] == json::array());
  CHECK(j["cod"] == json::array({2}));
  const auto e = entries(ev.out);
  REQUIRE(e.size() == 2);
  CHECK(std::abs(e[0]) <= 1e-12);
  CHECK(std::abs(e[1] - 0.5) <= 1e-12);
}

TEST_CASE("check") {
  TempDir tmp;
  const std::string good = tmp.file("good.json", io::encode_doc(bell_state()));
  CHECK(run({"check", good}).code == 0);
  json bad = json::parse(io::encode_doc(Diagram(H()) >> X()));
  bad["layers"][1]["left"] = json::array({"qubit"});
  const Result r = run({"check", tmp.file("bad.json", bad.dump())});
  CHECK(r.code == 1);
  CHECK(r.err.find("layer 1") != std::string::npos);
  CHECK(run({"check", tmp.file("missing.json")}).code == 1);
  CHECK(run({"check", "-"}, "{\"version\": 1}").code == 2);
}

TEST_CASE("eval semantics selection and errors") {
  const std::string mixed = io::encode_doc(Diagram(Ket(0)) >> H() >> Measure());
  const Result autosel = run({"eval"}, mixed);
  REQUIRE(autosel.code == 0);
  CHECK(json::parse(autosel.out)["semantics"] == "channel");
  const auto e = entries(autosel.out);
  REQUIRE(e.size() == 2);
  CHECK(std::abs(e[0] - 0.5) < 1e-12);
  CHECK(std::abs(e[1] - 0.5) < 1e-12);

  const Result forced = run({"eval", "--semantics", "pure"}, mixed);
  CHECK(forced.code == 3);
  CHECK(forced.err.find("Measure") != std::string::npos);

  const Result chan = run({"eval", "--semantics", "channel"}, io::encode_doc(teleportation()));
  REQUIRE(chan.code == 0);
  CHECK(json::parse(chan.out)["cod"] == json::array({2, 2}));

  const std::string param = io::encode_doc(Diagram(Rz(Expr::var("t"))));
  CHECK(run({"eval"}, param).code == 2);
  const Result bound = run({"eval", "--param", "t=0.5"}, param);
  REQUIRE(bound.code == 0);
  const auto b = entries(bound.out);
  CHECK(std::abs(b[0] - std::complex<double>(0, -1)) < 1e-12);
  CHECK(b[1] == std::complex<double>(0, 0));
  CHECK(run({"eval", "--param", "t=abc"}, param).code == 2);
  CHECK(run({"eval", "--semantics", "quantum"}, param).code == 2);
}

TEST_CASE("tolerance chops small components") {
  const std::string doc = io::encode_doc(Diagram(Ket(0)) >> H() >> H());
  const auto chopped = entries(run({"eval", "--tolerance", "1e-9"}, doc).out);
  CHECK(chopped[1] == std::complex<double>(0.0, 0.0));
  const auto raw = entries(run({"eval", "--tolerance", "0"}, doc).out);
  CHECK(std::abs(raw[1]) < 1e-15);
}

TEST_CASE("eval writes to -o") {
  TempDir tmp;
  const std::string out = tmp.file("out.json");
  const Result r = run({"eval", "-o", out}, io::encode_doc(bell_state()));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(entries(slurp(out)).size() == 4);
}

TEST_CASE("grad emits a sum or its value") {
  const std::string doc = io::encode_doc(Diagram(Rz(Expr::var("v"))) * Diagram(Rz(Expr::var("v"))));
  const Result sum = run({"grad", "--var", "v"}, doc);
  REQUIRE(sum.code == 0);
  CHECK(json::parse(sum.out)["terms"].size() == 2);
  const auto parsed = io::decode_doc(sum.out);
  CHECK(std::holds_alternative<Sum>(parsed));
  const Result at = run({"grad", "--var", "v", "--at", "0.25"}, doc);
  REQUIRE(at.code == 0);
  CHECK(entries(at.out).size() == 16);
  // The sum document evaluates like the direct value.
  const Result again = run({"eval", "--param", "v=0.25"}, sum.out);
  CHECK(entries(again.out) == entries(at.out));
  CHECK(run({"grad"}, doc).code == 2);
}

TEST_CASE("zx convert, simplify and eval") {
  TempDir tmp;
  const std::string circuit = tmp.file("c.json", io::encode_doc(Diagram(Rz(0.25)) >> Rz(0.25)));
  const std::string graph = tmp.file("g.json"), fused = tmp.file("f.json");
  REQUIRE(run({"zx", "convert", circuit, "-o", graph}).code == 0);
  REQUIRE(run({"zx", "simplify", graph, "-o", fused}).code == 0);
  CHECK(zx::graph_from_json(slurp(fused)).spider_count() == 1);
  const Result ev = run({"zx", "eval", fused});
  REQUIRE(ev.code == 0);
  const auto e = entries(ev.out);
  const auto want = eval_pure(Diagram(Rz(0.25)) >> Rz(0.25));
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(std::abs(e[i] - want.entries()[i]) < 1e-12);
  CHECK(run({"zx", "convert"}, io::encode_doc(Diagram(Ket(0)) >> Measure())).code == 3);
  CHECK(run({"zx", "eval"}, "{\"nodes\": []}").code == 2);
}

TEST_CASE("draw") {
  const std::string doc = io::encode_doc(Diagram(H()));
  const Result tikz = run({"draw", "--format", "tikz"}, doc);
  REQUIRE(tikz.code == 0);
  CHECK(tikz.out.find("\\begin{tikzpicture}") == 0);
  const Result svg = run({"draw", "--format", "svg", "--scale", "20"}, doc);
  REQUIRE(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(run({"draw", "--format", "png"}, doc).code == 2);
}

TEST_CASE("outputs are deterministic") {
  const std::string doc = run({"example", "teleportation"}).out;
  CHECK(run({"eval"}, doc).out == run({"eval"}, doc).out);
  CHECK(run({"draw"}, doc).out == run({"draw"}, doc).out);
  CHECK(run({"example", "teleportation"}).out == doc);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"example", "nope"}).code == 2);
  CHECK(run({"example", "bell"}).out == io::encode_doc(bell_state()));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the installed binary pipes") {
  const std::string cmd = std::string(WIREGRAM_CLI_PATH) + " example teleportation | " +
                          WIREGRAM_CLI_PATH + " eval";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  CHECK(pclose(pipe) == 0);
  const auto e = entries(out);
  REQUIRE(e.size() == 2);
  CHECK(std::abs(e[1] - 0.5) <= 1e-12);
}

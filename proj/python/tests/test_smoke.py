# Copyright 2026 The Wiregram Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import pytest

import wiregram


def test_teleportation_amplitudes():
    out = wiregram.evaluate(wiregram.teleportation())
    assert out["semantics"] == "pure"
    assert out["cod"] == [2]
    a0, a1 = out["entries"]
    assert abs(a0) <= 1e-12
    assert abs(a1 - 0.5) <= 1e-12


def test_channel_semantics_squares_the_scalar():
    out = wiregram.evaluate(wiregram.teleportation(), semantics="channel")
    assert out["cod"] == [2, 2]
    assert abs(out["entries"][3] - 0.25) <= 1e-12


def test_check_reports_layer_index():
    doc = json.loads(wiregram.bell_state())
    assert wiregram.check(json.dumps(doc)) == (True, "")
    doc["layers"][1]["left"] = ["qubit"]
    ok, message = wiregram.check(json.dumps(doc))
    assert not ok
    assert "layer 1" in message


def test_schema_errors_raise():
    with pytest.raises(wiregram.SchemaError):
        wiregram.evaluate('{"version": 2}')
    with pytest.raises(wiregram.Error):
        wiregram.evaluate("not json")


def test_gradient_matches_finite_difference():
    doc = {
        "version": 1,
        "dom": ["qubit"],
        "cod": ["qubit"],
        "layers": [
            {
                "left": [],
                "box": {"name": "Rz", "dom": ["qubit"], "cod": ["qubit"], "kind": "gate",
                        "payload": {"phase": {"var": "v"}}, "dagger": False},
                "right": [],
            }
        ],
    }
    text = json.dumps(doc)
    grad = wiregram.gradient(text, "v")
    x, h = 0.3, 1e-3
    got = wiregram.evaluate(grad, {"v": x})["entries"]
    at = lambda y: wiregram.evaluate(text, {"v": y})["entries"]
    # Fourth-order central stencil.
    for g, m2, m1, p1, p2 in zip(got, at(x - 2 * h), at(x - h), at(x + h), at(x + 2 * h)):
        assert abs(g - (m2 - 8 * m1 + 8 * p1 - p2) / (12 * h)) < 1e-8
    with pytest.raises(wiregram.UnboundVariable):
        wiregram.evaluate(text)


def test_zx_round_trip():
    graph = wiregram.zx_convert(wiregram.bell_state())
    fused = wiregram.zx_simplify(graph)
    before = wiregram.zx_evaluate(graph)["entries"]
    after = wiregram.zx_evaluate(fused)["entries"]
    s = 1 / math.sqrt(2)
    for want, b, a in zip([s, 0, 0, s], before, after):
        assert abs(b - want) < 1e-12
        assert abs(a - want) < 1e-12


def test_draw_is_deterministic():
    doc = wiregram.teleportation()
    svg = wiregram.draw(doc)
    assert svg.startswith("<?xml")
    assert svg == wiregram.draw(doc)
    assert wiregram.draw(doc, "tikz").startswith("\\begin{tikzpicture}")


def test_cli_in_process():
    code, out, err = wiregram.run_cli(["example", "teleportation"])
    assert code == 0 and err == ""
    code, out, _ = wiregram.run_cli(["eval", "-"], out)
    assert code == 0
    assert abs(complex(*json.loads(out)["entries"][1]) - 0.5) <= 1e-12
    code, _, err = wiregram.run_cli(["eval", "--semantics", "pure"],
                                    wiregram.run_cli(["example", "teleportation"])[1])
    assert code == 0

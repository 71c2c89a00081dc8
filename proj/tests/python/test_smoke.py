# Copyright 2026 The flatlim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import flatlim


def test_three_lines_give_extremal_limit():
    report = flatlim.certify([0, 1, 3])
    assert report["verdict"]["kind"] == "ExtremalLimit"
    assert report["hilbert"]["saturated"]["text"] == "3n + 3"
    assert report["rao_check"] is True


def test_shared_factor_gives_one_embedded_point():
    report = flatlim.certify(["0", "1", "2", "3"])
    assert report["verdict"] == {"kind": "EmbeddedPoints", "length": 1}
    assert report["embedded_point"] == "3*z + w"
    assert "4n" in flatlim.report_text(report)


def test_duplicate_points_are_rejected():
    report = flatlim.certify([1, 1, 2])
    assert report["verdict"]["kind"] == "Rejected"
    assert report["verdict"]["stage"] == "input"


def test_random_instance_is_reproducible():
    assert flatlim.random_points(4, 7) == flatlim.random_points(4, 7)
    report = flatlim.certify_random(4, 7)
    assert report["instance"]["seed"] == 7
    assert report["verdict"]["kind"] == "ExtremalLimit"


def test_groebner_and_membership():
    assert flatlim.groebner_basis(["x^2", "x*y + y^2"], order="lex") == ["y^3", "x*y + y^2", "x^2"]
    assert flatlim.contains(["x^2", "x*y + y^2"], "y^3")
    assert not flatlim.contains(["x^2", "x*y + y^2"], "y^2")


def test_hilbert_data():
    dim, coeffs, text = flatlim.hilbert_polynomial(["x", "y"])
    assert (dim, coeffs, text) == (2, [1, 1], "n + 1")
    assert flatlim.hilbert_function(["x^2"], 3) == [1, 4, 9, 16]


def test_initial_ideal_and_saturation():
    assert flatlim.initial_ideal(["x - y"], [2, 1, 1, 1]) == ["x"]
    assert flatlim.saturate(["x^2", "x*y", "x*z", "x*w"]) == ["x"]


def test_catalan_numbers():
    assert [flatlim.catalan(d) for d in range(2, 11)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_bad_input_raises():
    with pytest.raises(ValueError):
        flatlim.groebner_basis(["x +* y"])

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

"""Flat limits of lines on a quadric, certified with exact Groebner bases."""

import json
from typing import Iterable, List, Sequence, Tuple, Union

from . import _flatlim
from ._flatlim import DomainError, Error, ParseError

__all__ = [
    "DomainError",
    "Error",
    "ParseError",
    "catalan",
    "certify",
    "certify_random",
    "contains",
    "groebner_basis",
    "hilbert_function",
    "hilbert_polynomial",
    "initial_ideal",
    "random_points",
    "report_text",
    "saturate",
]

Number = Union[int, str]


def _field(p: int = 0) -> str:
    return "QQ" if not p else f"ZZ/{p}"


def certify(points: Iterable[Number], p: int = 0, degree_bound: int = 64) -> dict:
    """Certifies the limit for the given points; returns the report as a dict."""
    return json.loads(_flatlim.certify_json([str(a) for a in points], _field(p), degree_bound))


def random_points(d: int, seed: int, bound: int = 10, p: int = 0) -> List[str]:
    return _flatlim.random_points(d, seed, bound, _field(p))


def certify_random(d: int, seed: int, bound: int = 10, p: int = 0) -> dict:
    report = certify(random_points(d, seed, bound, p), p)
    report["instance"]["seed"] = seed
    report["instance"]["bound"] = bound
    return report


def report_text(report: dict) -> str:
    return _flatlim.report_text(json.dumps(report))


def groebner_basis(generators: Sequence[str], order: str = "grevlex", p: int = 0) -> List[str]:
    return _flatlim.groebner_basis(list(generators), order, _field(p))


def contains(generators: Sequence[str], f: str, p: int = 0) -> bool:
    return _flatlim.contains(list(generators), f, _field(p))


def initial_ideal(generators: Sequence[str], weights: Sequence[int], p: int = 0) -> List[str]:
    return _flatlim.initial_ideal(list(generators), list(weights), _field(p))


def saturate(generators: Sequence[str], p: int = 0) -> List[str]:
    """Saturation with respect to the irrelevant ideal (x, y, z, w)."""
    return _flatlim.saturate(list(generators), _field(p))


def hilbert_polynomial(generators: Sequence[str], p: int = 0) -> Tuple[int, List[int], str]:
    """(Krull dimension, power-basis coefficients, printed form)."""
    dim, coeffs, text = _flatlim.hilbert_polynomial(list(generators), _field(p))
    return dim, [int(c) for c in coeffs], text


def hilbert_function(generators: Sequence[str], max_degree: int, p: int = 0) -> List[int]:
    return _flatlim.hilbert_function(list(generators), max_degree, _field(p))


def catalan(d: int) -> int:
    return int(_flatlim.catalan(d))

"""Exact construction and verification of a 3-to-1 unrecoverable resistor network.

Rationals are exchanged as :class:`fractions.Fraction`; networks, responses
and reports are plain dicts whose numeric strings are converted to Fractions.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import _core
from ._core import (
    Error,
    InfeasibleFiber,
    InvariantViolation,
    NoBoundary,
    NonPositiveConductivity,
    NonPositiveParameter,
    NonPositiveSlack,
    ParseError,
    PoleError,
    SelfLoop,
    SingularInterior,
    TopologyMismatch,
    UnknownEndpoint,
    ZeroDenominator,
)

__all__ = [
    "Error",
    "InfeasibleFiber",
    "InvariantViolation",
    "NoBoundary",
    "NonPositiveConductivity",
    "NonPositiveParameter",
    "NonPositiveSlack",
    "ParseError",
    "PoleError",
    "SelfLoop",
    "SingularInterior",
    "TopologyMismatch",
    "UnknownEndpoint",
    "ZeroDenominator",
    "arity",
    "certificate",
    "chain_eval",
    "closed_form",
    "dirichlet_response",
    "play_game",
    "populate",
    "response",
    "run_cli",
    "topology",
    "verify_fiber",
]


def _text(value: Fraction | int | str) -> str:
    if isinstance(value, str):
        return value
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _network(raw: dict[str, Any]) -> dict[str, Any]:
    for edge in raw["edges"]:
        if edge["conductivity"] is not None:
            edge["conductivity"] = Fraction(edge["conductivity"])
    return raw


def _network_text(network: dict[str, Any]) -> str:
    edges = [dict(e, conductivity=_text(e["conductivity"])) for e in network["edges"]]
    return json.dumps({"vertices": network["vertices"], "edges": edges})


def _response(raw: dict[str, Any]) -> dict[str, Any]:
    raw["entries"] = [[Fraction(v) for v in row] for row in raw["entries"]]
    return raw


def topology() -> dict[str, Any]:
    """Unpopulated cactus: every conductivity is None."""
    return json.loads(_core.topology_json())


def populate(x: Fraction | int | str) -> dict[str, Any]:
    """Star-only network at fiber parameter x."""
    return _network(json.loads(_core.populate_json(_text(x))))


def verify_fiber(xs: Iterable[Fraction | int | str] = (2, 3, 4), slack: Fraction | int | str = 1) -> dict[str, Any]:
    """Populates, solves auxiliaries and checks exact response equality.

    Raises InfeasibleFiber when the parameters do not share one response.
    """
    report = json.loads(_core.verify_fiber_json([_text(x) for x in xs], _text(slack)))
    report["parameters"] = [Fraction(x) for x in report["parameters"]]
    report["slack"] = Fraction(report["slack"])
    for item in report["networks"]:
        item["x"] = Fraction(item["x"])
        _network(item["network"])
    for item in report["auxiliary_solution"]:
        item["x"] = Fraction(item["x"])
        for edge in item["edges"]:
            edge["conductivity"] = Fraction(edge["conductivity"])
    _response(report["common_response"])
    poly = report["conservation_polynomial"]
    poly["coefficients"] = [Fraction(c) for c in poly["coefficients"]]
    return report


def response(network: dict[str, Any]) -> dict[str, Any]:
    """Exact response matrix of a network dict by Schur complement."""
    return _response(json.loads(_core.response_json(_network_text(network))))


def dirichlet_response(network: dict[str, Any]) -> dict[str, Any]:
    """Same matrix rebuilt from independent Dirichlet solves."""
    return _response(json.loads(_core.dirichlet_response_json(_network_text(network))))


def chain_eval(loop: str, x: Fraction | int | str) -> list[Fraction]:
    return [Fraction(v) for v in _core.chain_eval(loop, _text(x))]


def closed_form(loop: str) -> str:
    return _core.closed_form(loop)


def certificate() -> dict[str, Any]:
    cert = _core.certificate()
    cert["coefficients"] = [Fraction(c) for c in cert["coefficients"]]
    cert["rational_roots"] = [Fraction(r) for r in cert["rational_roots"]]
    return cert


def arity() -> int:
    return _core.arity()


def play_game(target: str, promote: bool = False) -> dict[str, Any]:
    return json.loads(_core.game_json(target, promote))


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Runs the command-line tool in-process; returns (status, stdout, stderr)."""
    return _core.run_cli(list(args))

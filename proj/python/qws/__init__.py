"""Continuous-time quantum walks: state transfer, periodicity and mixing."""

import json

from ._qws import (
    Graph,
    InvalidArgument,
    NumericError,
    ParseError,
    average_mixing,
    eigenvalues,
    flatness_residual,
    parse,
    transition,
    transition_oracle,
)
from . import _qws

__all__ = [
    "Graph",
    "InvalidArgument",
    "NumericError",
    "ParseError",
    "analyze",
    "average_mixing",
    "census",
    "check",
    "eigenvalues",
    "find_pst",
    "flatness_residual",
    "parse",
    "transition",
    "transition_oracle",
]


def _graph(g):
    return parse(g) if isinstance(g, str) else g


def find_pst(graph, u, v=None, hamiltonian="adjacency"):
    return json.loads(_qws._find_pst(_graph(graph), u, v, hamiltonian))


def analyze(graph, pst_all=True, periodic=False, mixing=False, average_mixing=False,
            t_max=100.0, hamiltonian="adjacency"):
    return json.loads(_qws._analyze(_graph(graph), pst_all, periodic, mixing, average_mixing,
                                    t_max, hamiltonian))


def census(family, size):
    """Rows of a cubelike (size = d) or circulant (size = n) census; the last row is the summary."""
    if family not in ("cubelike", "circulant"):
        raise ValueError(f"unknown family {family!r}")
    return [json.loads(line) for line in _qws._census(family, size).splitlines()]


def check(check_id):
    return json.loads(_qws._check(check_id))["checks"][0]

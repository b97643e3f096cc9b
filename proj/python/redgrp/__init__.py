"""Connected reductive groups as central gluing data.

Data are plain dicts in the JSON datum format used by the ``redgrp`` command
line tool, for example GL2::

    {"torus_rank": 1, "factors": ["A1"], "H": [[1]],
     "K_modulus": 2, "K": [[1]], "alpha": [[1]]}
"""

import json

from . import _core
from ._core import Error

__all__ = [
    "Error",
    "center",
    "classify",
    "enumerate_rank",
    "invariants",
    "isomorphic",
    "name",
    "run",
    "torus_split",
    "twins",
]


def _doc(datum):
    return datum if isinstance(datum, str) else json.dumps(datum)


def center(group):
    """Invariant factors of the center of a simply connected group ("D4", "A1xA2")."""
    return _core.center(group)


def enumerate_rank(rank, p=0, max_rank=3):
    return json.loads(_core.enumerate(rank, p, max_rank))


def name(datum):
    return _core.name(_doc(datum))


def isomorphic(a, b):
    """Witness (list of generator names) or None."""
    return _core.isomorphic(_doc(a), _doc(b))


def invariants(datum):
    return json.loads(_core.invariants(_doc(datum)))


def classify(datum):
    return json.loads(_core.classify(_doc(datum)))


def torus_split(datum):
    return json.loads(_core.torus_split(_doc(datum)))


def twins(base, n):
    return json.loads(_core.twins(base, n))


def run(*args):
    return _core.run([str(a) for a in args])

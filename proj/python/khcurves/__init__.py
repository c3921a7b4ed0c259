"""Bar-Natan complexes over the two-vertex algebra, immersed curves and pairings.

Complexes and multicurves are plain dicts in the JSON file format. Anything
that is already a string is passed through unchanged.
"""

import json

from . import _khcurves as _k
from ._khcurves import FormatError, NonStabilizing, UnsupportedFamily, UnsupportedPairing

__all__ = [
    "FormatError", "NonStabilizing", "UnsupportedFamily", "UnsupportedPairing",
    "example_names", "example", "compile", "validate", "reduce", "cone",
    "mor_homology", "total_dim", "torsion", "geometric_dim", "detect_split",
    "ecsc_scan", "agccc_report",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def example_names():
    return _k.example_names()


def example(name):
    return json.loads(_k.example(name))


def compile(family):
    return json.loads(_k.compile(family))


def validate(x):
    return json.loads(_k.validate(_text(x)))


def reduce(x):
    return json.loads(_k.reduce(_text(x)))


def cone(x):
    return json.loads(_k.cone(_text(x)))


def mor_homology(x, y, cap=None):
    """Ranks of the morphism space homology, keyed by (q, h)."""
    return _k.mor_homology(_text(x), _text(y), cap)


def total_dim(x, y, cap=None):
    return sum(mor_homology(x, y, cap).values())


def torsion(x, y):
    return json.loads(_k.torsion(_text(x), _text(y)))


def geometric_dim(arc_slope, curve):
    return _k.geometric_dim(str(arc_slope), _text(curve))


def detect_split(x):
    return json.loads(_k.detect_split(_text(x)))


def ecsc_scan(curve, n_max=8):
    return json.loads(_k.ecsc_scan(_text(curve), n_max))


def agccc_report(curve, n_max=8, mu=None):
    return json.loads(_k.agccc_report(_text(curve), n_max, mu))

"""Graded hypersurface singularity calculator.

Every function returns plain Python data decoded from the native JSON reports;
large integers arrive as decimal strings and rationals as "p/q".
"""

import json

from . import _hsing

__version__ = _hsing.__version__


def _weights(w):
    if isinstance(w, str):
        return [int(x) for x in w.split(",")]
    return [int(x) for x in w]


def analyze(weights, node_limit=0):
    return json.loads(_hsing.analyze(_weights(weights), node_limit))


def group(weights):
    return json.loads(_hsing.group(_weights(weights)))


def decompose(weights, node_limit=0):
    return json.loads(_hsing.decompose(_weights(weights), node_limit))


def sod(weights):
    return json.loads(_hsing.sod(_weights(weights)))


def quiver(spec):
    return json.loads(_hsing.quiver(spec))


def mf(d, window=6):
    return json.loads(_hsing.mf(d, window))


def orbit(d=3, window=6):
    return json.loads(_hsing.orbit(d, window))


def verify(suite, node_limit=0, window=6, max_n=3, max_entry=6, max_d=8):
    return json.loads(_hsing.verify(suite, node_limit, window, max_n, max_entry, max_d))


def smith_normal_form(matrix):
    return json.loads(_hsing.smith_normal_form([list(map(int, r)) for r in matrix]))


def min_partition(weights, predicate, node_limit=0):
    return json.loads(_hsing.min_partition(_weights(weights), predicate, node_limit))


def coxeter_polynomial(cartan):
    return json.loads(_hsing.coxeter_polynomial([list(map(int, r)) for r in cartan]))


def exceptional_count(weights):
    v = json.loads(_hsing.exceptional_count(_weights(weights)))
    return int(v)


suite_names = _hsing.suite_names

__all__ = [
    "analyze", "group", "decompose", "sod", "quiver", "mf", "orbit", "verify",
    "smith_normal_form", "min_partition", "coxeter_polynomial", "exceptional_count", "suite_names",
]

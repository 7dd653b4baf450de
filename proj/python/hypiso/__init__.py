"""Python access to the hyperbolic polygon bound evaluators."""

import json

from . import _core
from ._core import HypisoError

__all__ = [
    "HypisoError",
    "regular_convert",
    "evaluate_bound",
    "polygon_metrics",
    "verify",
    "optimize",
    "run_cli",
]


def regular_convert(n, by, value):
    """Metrics of the regular n-gon fixed by one of circumradius, inradius,
    interior_angle or side_length."""
    return json.loads(_core.regular_convert(n, by, value))


def evaluate_bound(id, n, parameter, k=1):
    """Evaluate a bound by its command-line id ("1.1" ... "1.10", "cor1")."""
    return json.loads(_core.evaluate_bound(id, n, k, parameter))


def polygon_metrics(polygon):
    """Closed-form and hyperboloid-measured metrics of a polygon dict with
    keys kind, n, radius and thetas."""
    return json.loads(_core.polygon_metrics(json.dumps(polygon)))


def verify(id, trials=1000, seed=0x15090001, n=None, k=2, threads=0):
    """Randomized verification report for one bound."""
    return json.loads(_core.verify(id, trials, seed, n, k, threads))


def optimize(objective, n=6, k=2, seed=0x15090001):
    """Equal-sum optimization report for a registered objective."""
    return json.loads(_core.optimize(objective, n, k, seed))


def run_cli(*args):
    """Run the command-line interface in-process; returns (code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])

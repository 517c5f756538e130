"""Equivariant localization sums over isolated fixed points.

A fixed point contributes 1 / (product of its tangent weights); the oracle
value of an integral is the sum of contributions.  Tangent weights are
nonzero homogeneous linear forms in the equivariant parameters.  For the
rank-one quasi-map space of degree d the fixed point at the "pure boundary"
configuration has tangent weights {i*h : i <= d} and {a1 + i*h : i <= d},
whose contribution reproduces the closed-form coefficient A_d.
"""

import json

from .errors import UsageError
from .rationals import Polynomial, RationalFunction, parse_polynomial

SL2_VARS = ("a1", "h")


class FixedPointDatum:
    """Isolated fixed point with its tangent weights."""

    __slots__ = ("label", "weights")

    def __init__(self, label, weights):
        self.label = str(label)
        ws = list(weights)
        if not ws:
            raise UsageError(f"fixed point {label!r} has no tangent weights")
        for w in ws:
            if not isinstance(w, Polynomial):
                raise TypeError("weights must be Polynomial instances")
            if w.is_zero():
                raise UsageError(f"fixed point {label!r} has a zero tangent weight")
            if any(sum(e) != 1 for e in w.terms):
                raise UsageError(
                    f"fixed point {label!r}: weight {w} is not homogeneous linear"
                )
        self.weights = tuple(ws)

    def contribution(self):
        den = Polynomial.const(self.weights[0].vars, 1)
        for w in self.weights:
            den = den * w
        return RationalFunction(Polynomial.const(den.vars, 1), den)

    def __repr__(self):
        return f"FixedPointDatum({self.label!r}, {len(self.weights)} weights)"


def localized_integral(points):
    """Sum of reciprocal weight products over the fixed points."""
    points = list(points)
    if not points:
        raise UsageError("localization requires at least one fixed point")
    total = None
    for p in points:
        c = p.contribution()
        total = c if total is None else total + c
    return total


def sl2_quasimap_fixed_point(d):
    """Tangent weights at the distinguished degree-d fixed point."""
    if d < 1:
        raise UsageError("quasi-map fixed point needs degree >= 1")
    a = Polynomial.variable(SL2_VARS, "a1")
    h = Polynomial.variable(SL2_VARS, "h")
    weights = [i * h for i in range(1, d + 1)]
    weights += [a + i * h for i in range(1, d + 1)]
    return FixedPointDatum(f"boundary-{d}", weights)


def _infer_variables(strings):
    import re

    names = set()
    for s in strings:
        names.update(re.findall(r"[a-z][a-z0-9_]*", s))
    a_vars = sorted(
        (n for n in names if n[0] == "a" and n[1:].isdigit()),
        key=lambda n: int(n[1:]),
    )
    tail = [n for n in ("eps", "h") if n in names]
    rest = sorted(names - set(a_vars) - set(tail))
    return tuple(a_vars + rest + tail)


def fixed_point_from_obj(obj, variables=None):
    if not isinstance(obj, dict) or "label" not in obj or "weights" not in obj:
        raise UsageError("fixed point object needs 'label' and 'weights'")
    if variables is None:
        variables = _infer_variables([str(w) for w in obj["weights"]])
    weights = [parse_polynomial(str(w), variables) for w in obj["weights"]]
    return FixedPointDatum(obj["label"], weights)


def load_fixed_points(text):
    """Parse a JSON array (or single object) of fixed-point data."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid fixed-point JSON: {exc}") from exc
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise UsageError("fixed-point JSON must be an object or array")
    all_weights = [str(w) for obj in data if isinstance(obj, dict) for w in obj.get("weights", [])]
    variables = _infer_variables(all_weights)
    return [fixed_point_from_obj(obj, variables) for obj in data]

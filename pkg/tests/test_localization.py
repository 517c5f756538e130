"""Fixed-point localization sums and the rank-one quasi-map instance."""

import json

import pytest

from zastava.errors import UsageError
from zastava.localization import (
    SL2_VARS,
    FixedPointDatum,
    fixed_point_from_obj,
    load_fixed_points,
    localized_integral,
    sl2_quasimap_fixed_point,
)
from zastava.rationals import Polynomial, RationalFunction
from zastava.sl2 import closed_form_a


def _a_h():
    return (
        Polynomial.variable(SL2_VARS, "a1"),
        Polynomial.variable(SL2_VARS, "h"),
    )


def test_single_point_examples():
    a, h = _a_h()
    assert localized_integral([FixedPointDatum("pt", [h])]) == RationalFunction(
        Polynomial.const(SL2_VARS, 1), h
    )
    assert localized_integral([FixedPointDatum("pt", [h, a + h])]) == closed_form_a(1)


def test_two_point_cancellation():
    a, _ = _a_h()
    points = [FixedPointDatum("n", [a]), FixedPointDatum("s", [-a])]
    assert localized_integral(points).is_zero()


def test_rejects_degenerate_data():
    a, h = _a_h()
    with pytest.raises(UsageError):
        localized_integral([])
    with pytest.raises(UsageError):
        FixedPointDatum("pt", [])
    with pytest.raises(UsageError):
        FixedPointDatum("pt", [Polynomial.zero(SL2_VARS)])
    with pytest.raises(UsageError):
        FixedPointDatum("pt", [a * h])
    with pytest.raises(UsageError):
        FixedPointDatum("pt", [a + 1])
    with pytest.raises(TypeError):
        FixedPointDatum("pt", ["h"])


def test_quasimap_weights():
    a, h = _a_h()
    assert sl2_quasimap_fixed_point(1).weights == (h, a + h)
    assert sl2_quasimap_fixed_point(2).weights == (h, 2 * h, a + h, a + 2 * h)
    with pytest.raises(UsageError):
        sl2_quasimap_fixed_point(0)
    # the weight product must be the reciprocal of the closed form
    for d in (1, 2, 5):
        product = Polynomial.const(SL2_VARS, 1)
        for w in sl2_quasimap_fixed_point(d).weights:
            product = product * w
        assert RationalFunction(Polynomial.const(SL2_VARS, 1), product) == closed_form_a(d)


def test_contribution_homogeneity():
    # n weights -> total degree -n
    for d in (1, 3):
        value = sl2_quasimap_fixed_point(d).contribution()
        assert value.num.degree() - value.den.degree() == -2 * d


def test_json_loading():
    text = json.dumps(
        [
            {"label": "north", "weights": ["h", "a1 + h"]},
            {"label": "south", "weights": ["-h", "a1 - h"]},
        ]
    )
    points = load_fixed_points(text)
    assert [p.label for p in points] == ["north", "south"]
    assert points[0].weights[1].vars == points[1].weights[0].vars
    single = load_fixed_points(json.dumps({"label": "pt", "weights": ["h"]}))
    assert len(single) == 1
    with pytest.raises(UsageError):
        load_fixed_points("not json")
    with pytest.raises(UsageError):
        load_fixed_points(json.dumps(["nope"]))
    with pytest.raises(UsageError):
        fixed_point_from_obj({"label": "x"})

"""Standalone residual checks of the quadratic identities."""

import json

import pytest

from zastava.cartan import build_cartan
from zastava.errors import UsageError
from zastava.rationals import RationalFunction
from zastava.series import (
    SeriesTable,
    z_series_affine_whittaker,
    z_series_toda,
    z_series_whittaker,
)
from zastava.toda import check_affine_toda, check_finite_toda, residual_report


def test_toda_built_tables_have_zero_residuals():
    table = z_series_toda(build_cartan("B2"), 4)
    residuals = check_finite_toda(table)
    assert all(r.ok for r in residuals)
    # zero content included, with residual identically zero
    assert residuals[0].content == (0, 0)
    assert residuals[0].residual.is_zero()


def test_whittaker_tables_have_zero_residuals():
    table = z_series_whittaker(build_cartan("A1"), 8)
    assert all(r.ok for r in check_finite_toda(table))


def test_mutation_shows_up_at_perturbed_and_forward_contents():
    table = z_series_whittaker(build_cartan("A1"), 4)
    one = RationalFunction.one(table.variables)
    perturbed = dict(table.entries)
    perturbed[(1,)] = perturbed[(1,)] + one
    bad = SeriesTable(table.algebra, table.cap, perturbed, table.variables)
    by_content = {r.content: r for r in check_finite_toda(bad)}
    assert not by_content[(1,)].ok
    assert not by_content[(2,)].ok
    assert by_content[(0,)].ok
    assert by_content[(3,)].ok
    assert by_content[(4,)].ok


def test_affine_residuals_zero_and_eps_free_slice():
    table = z_series_affine_whittaker(build_cartan("A1~"), 3)
    residuals = check_affine_toda(table)
    assert all(r.ok for r in residuals)
    # rows with n_0 = 0 involve no eps at all: residual of the embedded
    # finite theory
    finite = z_series_whittaker(build_cartan("A1"), 3)
    for r in check_finite_toda(finite):
        assert r.ok


def test_kind_guards():
    finite = z_series_whittaker(build_cartan("A1"), 2)
    affine = z_series_affine_whittaker(build_cartan("A1~"), 2)
    with pytest.raises(UsageError):
        check_finite_toda(affine)
    with pytest.raises(UsageError):
        check_affine_toda(finite)


def test_residual_report_shape():
    table = z_series_toda(build_cartan("A2"), 2)
    text = residual_report(check_finite_toda(table))
    data = json.loads(text)
    assert all(set(item) == {"content", "residual", "ok"} for item in data)
    assert all(item["ok"] for item in data)
    assert data[0]["content"] == [0, 0]
    assert data[0]["residual"] == "(0) / (1)"
    assert text.endswith("\n")

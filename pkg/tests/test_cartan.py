"""Cartan catalog, dualization, root enumeration, and the normalized form."""

from fractions import Fraction

import pytest

from zastava.cartan import (
    CartanDatum,
    build_cartan,
    contents_up_to,
    dualize,
    form_matrix,
    form_pairing,
    height,
    kostant_partition,
    null_vector,
    positive_roots,
)
from zastava.errors import UsageError


def test_catalog_members():
    for label in ("A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2"):
        datum = build_cartan(label)
        assert not datum.is_affine
        assert datum.label == label
    for label in ("A1~", "A2~"):
        datum = build_cartan(label)
        assert datum.is_affine
    with pytest.raises(UsageError):
        build_cartan("E8")
    with pytest.raises(UsageError):
        build_cartan("dual(")


def test_known_matrices():
    assert build_cartan("B2").matrix == ((2, -1), (-2, 2))
    assert build_cartan("C2").matrix == ((2, -2), (-1, 2))
    assert build_cartan("G2").matrix == ((2, -1), (-3, 2))
    assert build_cartan("A1~").matrix == ((2, -2), (-2, 2))
    a2t = build_cartan("A2~").matrix
    assert all(a2t[i][i] == 2 for i in range(3))
    assert all(a2t[i][j] == -1 for i in range(3) for j in range(3) if i != j)


def test_dualize_transposes_and_wraps_label():
    b2 = build_cartan("B2")
    dual = dualize(b2)
    assert dual.matrix == ((2, -2), (-1, 2))
    assert dual.label == "dual(B2)"
    assert dualize(dual).label == "B2"
    assert build_cartan("dual(B2)").matrix == dual.matrix
    # simply-laced types are self-dual as matrices
    a2 = build_cartan("A2")
    assert dualize(a2).matrix == a2.matrix


def test_validation_rejects_malformed_matrices():
    with pytest.raises(ValueError):
        CartanDatum("bad", ((2, -1),), "finite")
    with pytest.raises(ValueError):
        CartanDatum("bad", ((1, -1), (-1, 2)), "finite")
    with pytest.raises(ValueError):
        CartanDatum("bad", ((2, 1), (1, 2)), "finite")
    with pytest.raises(ValueError):
        CartanDatum("bad", ((2, -1), (0, 2)), "finite")
    # affine label with nonsingular matrix (and vice versa)
    with pytest.raises(ValueError):
        CartanDatum("bad", ((2, -1), (-1, 2)), "affine")
    with pytest.raises(ValueError):
        CartanDatum("bad", ((2, -2), (-2, 2)), "finite")


def test_affine_node_is_last():
    at = build_cartan("A1~")
    assert at.size == 2
    assert at.finite_rank == 1
    assert at.affine_node == 1
    assert build_cartan("A2~").affine_node == 2


def test_positive_roots_finite():
    assert positive_roots(build_cartan("A2")) == [
        ((0, 1), 1),
        ((1, 0), 1),
        ((1, 1), 1),
    ]
    assert positive_roots(build_cartan("B2")) == [
        ((0, 1), 1),
        ((1, 0), 1),
        ((1, 1), 1),
        ((1, 2), 1),
    ]
    assert positive_roots(build_cartan("G2")) == [
        ((0, 1), 1),
        ((1, 0), 1),
        ((1, 1), 1),
        ((1, 2), 1),
        ((1, 3), 1),
        ((2, 3), 1),
    ]
    # counts for the larger members: A3 has 6, B3/C3 have 9, D4 has 12
    assert len(positive_roots(build_cartan("A3"))) == 6
    assert len(positive_roots(build_cartan("B3"))) == 9
    assert len(positive_roots(build_cartan("C3"))) == 9
    assert len(positive_roots(build_cartan("D4"))) == 12


def test_positive_roots_affine():
    roots = positive_roots(build_cartan("A1~"), 3)
    assert roots == [
        ((0, 1), 1),
        ((1, 0), 1),
        ((1, 1), 1),
        ((1, 2), 1),
        ((2, 1), 1),
    ]
    with pytest.raises(UsageError):
        positive_roots(build_cartan("A1~"))
    # imaginary multiplicity equals the finite rank (2 for the rank-2 cycle)
    a2t = positive_roots(build_cartan("A2~"), 3)
    assert (((1, 1, 1), 2)) in a2t


def test_null_vector():
    assert null_vector(build_cartan("A1~")) == (1, 1)
    assert null_vector(build_cartan("A2~")) == (1, 1, 1)
    with pytest.raises(UsageError):
        null_vector(build_cartan("A2"))


def test_form_normalization():
    B = form_matrix(build_cartan("B2"))
    assert B.entries == ((Fraction(2), Fraction(-1)), (Fraction(-1), Fraction(1)))
    assert B.half_norms == (Fraction(1), Fraction(1, 2))
    dual_B = form_matrix(build_cartan("dual(B2)"))
    assert dual_B.entries == ((Fraction(1), Fraction(-1)), (Fraction(-1), Fraction(2)))
    assert dual_B.half_norms == (Fraction(1, 2), Fraction(1))
    G = form_matrix(build_cartan("G2"))
    assert G.entries == ((Fraction(2), Fraction(-1)), (Fraction(-1), Fraction(2, 3)))
    dual_G = form_matrix(build_cartan("dual(G2)"))
    assert dual_G.entries == ((Fraction(2, 3), Fraction(-1)), (Fraction(-1), Fraction(2)))
    # simply-laced: the form is the Cartan matrix itself
    assert form_matrix(build_cartan("A2")).entries == (
        (Fraction(2), Fraction(-1)),
        (Fraction(-1), Fraction(2)),
    )
    assert form_matrix(build_cartan("A1~")).entries == (
        (Fraction(2), Fraction(-2)),
        (Fraction(-2), Fraction(2)),
    )


def test_form_pairing_values():
    B = form_matrix(build_cartan("A2"))
    assert form_pairing(B, (1, 0), (1, 0)) == 2
    assert form_pairing(B, (1, 0), (0, 1)) == -1
    assert form_pairing(B, (1, 1), (1, 1)) == 2
    with pytest.raises(ValueError):
        form_pairing(B, (1,), (1, 0))


def test_kostant_partition_values():
    a2 = build_cartan("A2")
    assert kostant_partition(a2, (0, 0)) == 1
    assert kostant_partition(a2, (1, 0)) == 1
    assert kostant_partition(a2, (1, 1)) == 2
    assert kostant_partition(a2, (2, 1)) == 2
    assert kostant_partition(a2, (2, 2)) == 3
    b2 = build_cartan("B2")
    assert kostant_partition(b2, (1, 2)) == 3
    at = build_cartan("A1~")
    assert kostant_partition(at, (1, 1)) == 2
    assert kostant_partition(at, (2, 2)) == 6


def test_heights_and_content_enumeration():
    assert height((2, 3)) == 5
    cs = contents_up_to(2, 2)
    assert cs == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert all(height(c) <= 3 for c in contents_up_to(3, 3))

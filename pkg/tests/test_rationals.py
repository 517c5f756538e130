"""Exact arithmetic kernel: polynomials, canonical rational functions,
the consistent solver, and the canonical-string grammar."""

from fractions import Fraction

import pytest

from zastava.rationals import (
    ExactDivisionError,
    Matrix,
    PoleError,
    Polynomial,
    RationalFunction,
    SolveInconsistentError,
    parse_polynomial,
    parse_rational,
    poly_gcd,
    solve_consistent,
)

V = ("x", "y")


def x_y():
    return Polynomial.variable(V, "x"), Polynomial.variable(V, "y")


def test_polynomial_arithmetic_basics():
    x, y = x_y()
    p = (x + y) ** 2
    assert p == x * x + 2 * x * y + y * y
    assert (p - p).is_zero()
    assert p.degree() == 2
    assert p.degree_in(0) == 2
    assert (3 * x - x - x - x).is_zero()
    assert (x * 0).is_zero()
    q = Fraction(1, 2) * x
    assert q + q == x


def test_polynomial_ordering_and_display():
    x, y = x_y()
    p = y + x * x + 3 * x
    assert str(p) == "x^2 + 3*x + y"
    assert p.leading_exponent() == (2, 0)
    assert p.leading_coefficient() == 1
    assert str(x - y) == "x - y"
    assert str(Polynomial.const(V, Fraction(-3, 2))) == "-3/2"
    assert str(Polynomial.zero(V)) == "0"


def test_exact_division():
    x, y = x_y()
    p = (x + y) * (x - y)
    assert p.exact_div(x + y) == x - y
    with pytest.raises(ExactDivisionError):
        (x * x + y).exact_div(x + y)
    # monomial fast path
    m = 4 * x * x * y
    assert m.exact_div(2 * x) == 2 * x * y


def test_poly_gcd_normalization():
    x, y = x_y()
    g = poly_gcd(2 * x + 2, 4 * x * x - 4)
    assert g == x + Polynomial.const(V, 1)
    assert poly_gcd(Polynomial.zero(V), -2 * x) == x
    # gcd of coprime polys is 1
    assert poly_gcd(x + y, x - y).is_constant()
    big = (x + y) ** 3 * (x - y)
    assert poly_gcd(big, (x + y) ** 2) == (x + y) ** 2


def test_rational_canonical_form():
    x, y = x_y()
    f = RationalFunction(2 * x, 4 * y)
    assert str(f) == "(x) / (2*y)"
    g = RationalFunction(x * x - y * y, x + y)
    assert g.den.is_constant()
    assert g == RationalFunction(x - y)
    # denominator leading sign is normalized away
    h = RationalFunction(x, -y)
    assert str(h) == "(-x) / (y)"
    assert RationalFunction(Polynomial.zero(V), x).is_zero()


def test_rational_arithmetic():
    x, y = x_y()
    one = RationalFunction.one(V)
    f = RationalFunction(Polynomial.const(V, 1), x)
    g = RationalFunction(Polynomial.const(V, 1), y)
    assert f + g == RationalFunction(x + y, x * y)
    assert f * g == RationalFunction(Polynomial.const(V, 1), x * y)
    assert (f / f) == one
    assert f - f == RationalFunction.zero(V)
    assert f**3 == RationalFunction(Polynomial.const(V, 1), x**3)
    assert f**-2 == RationalFunction(x * x)
    assert (2 * f) == RationalFunction(Polynomial.const(V, 2), x)
    assert one + 1 == RationalFunction.constant(V, 2)


def test_rational_evaluate_and_poles():
    x, y = x_y()
    f = RationalFunction(x, x + y)
    assert f.evaluate({"x": Fraction(1), "y": Fraction(2)}) == Fraction(1, 3)
    with pytest.raises(PoleError):
        f.evaluate({"x": Fraction(1), "y": Fraction(-1)})


def test_extend_variables():
    x, _ = x_y()
    f = RationalFunction(x)
    g = f.extend(("w", "x", "y"))
    assert g.vars == ("w", "x", "y")
    assert str(g) == "(x) / (1)"
    with pytest.raises(ValueError):
        f.extend(("y",))


def test_parser_round_trip():
    x, y = x_y()
    cases = [
        RationalFunction(x + y, 2 * x * y),
        RationalFunction(Polynomial.const(V, Fraction(3, 2)) * x**2 - y),
        RationalFunction(-x, y * y),
        RationalFunction.one(V),
        RationalFunction.zero(V),
    ]
    for f in cases:
        assert parse_rational(str(f), V) == f
    p = 3 * x * x * y - Fraction(1, 2) * y + 7
    assert parse_polynomial(str(p), V) == p
    # bare polynomial accepted as a rational
    assert parse_rational("x^2 + y", V) == RationalFunction(x * x + y)
    with pytest.raises(ValueError):
        parse_polynomial("x + z", V)


def test_matrix_helpers():
    x, y = x_y()
    rows = [[RationalFunction(x), RationalFunction(y)], [RationalFunction(y), RationalFunction(x)]]
    m = Matrix(rows)
    assert m.nrows == 2 and m.ncols == 2
    assert m[(0, 1)] == RationalFunction(y)
    assert m.is_symmetric()
    applied = m.apply([RationalFunction.one(V), RationalFunction.zero(V)])
    assert applied[0] == RationalFunction(x)


def test_solve_consistent_unique():
    x, y = x_y()
    one = RationalFunction.one(V)
    rx = RationalFunction(x)
    ry = RationalFunction(y)
    # [[x, 0], [0, y]] c = (1, 1)
    m = Matrix([[rx, RationalFunction.zero(V)], [RationalFunction.zero(V), ry]])
    sol = solve_consistent(m, [one, one])
    assert sol[0] == one / rx
    assert sol[1] == one / ry
    residual = m.apply(sol)
    assert residual[0] == one and residual[1] == one


def test_solve_consistent_redundant_rows():
    x, _ = x_y()
    one = RationalFunction.one(V)
    rx = RationalFunction(x)
    # second row is a multiple of the first: consistent, rank 1
    m = Matrix([[rx, rx], [2 * rx, 2 * rx]])
    sol = solve_consistent(m, [one, 2 * one], expected_rank=1)
    assert m.apply(sol) == [one, 2 * one]


def test_solve_inconsistent_reports_row():
    x, _ = x_y()
    one = RationalFunction.one(V)
    rx = RationalFunction(x)
    m = Matrix([[rx, rx], [rx, rx]])
    with pytest.raises(SolveInconsistentError) as info:
        solve_consistent(m, [one, 2 * one])
    assert info.value.row == 1


def test_solve_certificate():
    x, y = x_y()
    one = RationalFunction.one(V)
    rx, ry = RationalFunction(x), RationalFunction(y)
    m = Matrix([[rx, ry], [ry, rx]])
    sol, numerators, det = solve_consistent(m, [one, one], certificate=True)
    # the certificate reconstructs the solution as numerator / det
    for j, value in numerators.items():
        assert sol[j] == RationalFunction(value, det)
    assert m.apply(sol) == [one, one]


def test_format_matches_known_series_value():
    # 1 / (2 a1^2 h^2 + 6 a1 h^3 + 4 h^4), the degree-2 rank-one coefficient
    vars2 = ("a1", "h")
    a = Polynomial.variable(vars2, "a1")
    h = Polynomial.variable(vars2, "h")
    den = 2 * h * h * (a + h) * (a + 2 * h)
    f = RationalFunction(Polynomial.const(vars2, 1), den)
    assert str(f) == "(1) / (2*a1^2*h^2 + 6*a1*h^3 + 4*h^4)"

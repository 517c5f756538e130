"""Standalone Toda-identity verifiers.

These re-check finished tables against the quadratic eigen-identity
(finite) and its non-stationary analogue (affine), coefficient by
coefficient, independently of how the table was produced.  A residual of
exactly zero at every content is the pass condition; the operators are
linear, so a single perturbed entry shows up as nonzero residuals at the
perturbed content and at the contents one simple root above it.
"""

import json

from .cartan import dualize, form_matrix, form_pairing, null_vector
from .errors import UsageError
from .rationals import Polynomial, RationalFunction
from .series import _affine_split


class TodaResidual:
    """Residual of the quadratic identity at one content; zero iff the
    table satisfies the identity there."""

    __slots__ = ("content", "residual")

    def __init__(self, content, residual):
        self.content = tuple(content)
        self.residual = residual

    @property
    def ok(self):
        return self.residual.is_zero()

    def __repr__(self):
        return f"TodaResidual({self.content}, ok={self.ok})"


def check_finite_toda(table):
    """Residuals (2h(a,theta) + h^2(theta,theta)) Z_theta
    - 2 sum_i d_i Z_{theta-alpha_i} over every content of the table, in
    (height, lex) order.  Missing shifts below the positive cone count as
    zero; the zero content has residual zero identically."""
    if table.algebra.is_affine:
        raise UsageError("check_finite_toda expects a finite table")
    rank = table.algebra.size
    variables = table.variables
    working = dualize(table.algebra)
    B = form_matrix(working)
    half_norms = B.half_norms
    h = RationalFunction(Polynomial.variable(variables, "h"))
    a = [RationalFunction(Polynomial.variable(variables, f"a{i}")) for i in range(1, rank + 1)]
    zero = RationalFunction.zero(variables)
    out = []
    for theta in table.contents():
        a_theta = zero
        for i in range(rank):
            if theta[i]:
                a_theta = a_theta + (theta[i] * half_norms[i]) * a[i]
        theta_sq = form_pairing(B, theta, theta)
        lhs = (2 * h * a_theta + theta_sq * h * h) * table.entries[theta]
        rhs = zero
        for i in range(rank):
            if theta[i] == 0:
                continue
            shifted = tuple(n - 1 if j == i else n for j, n in enumerate(theta))
            value = table.entries.get(shifted)
            if value is not None:
                rhs = rhs + (2 * half_norms[i]) * value
        out.append(TodaResidual(theta, lhs - rhs))
    return out


def check_affine_toda(table):
    """Residuals of the non-stationary identity

        (2 h eps n_0 + 2 h (a, fin theta) + h^2 (fin theta, fin theta)) Z_theta
            - 2 sum_{i} d_i Z_{theta - alpha_i}

    over every content of an affine table.  The n_0 = 0 rows carry no eps
    term and reduce to the finite check of the embedded finite theory."""
    if not table.algebra.is_affine:
        raise UsageError("check_affine_toda expects an affine table")
    size = table.algebra.size
    rank = table.algebra.finite_rank
    variables = table.variables
    working = dualize(table.algebra)
    B_aff = form_matrix(working)
    half_norms = B_aff.half_norms
    fin_B = [row[:rank] for row in B_aff.entries[:rank]]
    h = RationalFunction(Polynomial.variable(variables, "h"))
    eps = RationalFunction(Polynomial.variable(variables, "eps"))
    a = [RationalFunction(Polynomial.variable(variables, f"a{i}")) for i in range(1, rank + 1)]
    zero = RationalFunction.zero(variables)
    out = []
    for theta in table.contents():
        n0, fin = _affine_split(working, theta)
        a_fin = zero
        for i in range(rank):
            if fin[i]:
                a_fin = a_fin + (fin[i] * half_norms[i]) * a[i]
        fin_sq = sum(
            fin[i] * fin[j] * fin_B[i][j] for i in range(rank) for j in range(rank)
        )
        lhs = ((2 * n0) * h * eps + 2 * h * a_fin + fin_sq * h * h) * table.entries[theta]
        rhs = zero
        for i in range(size):
            if theta[i] == 0:
                continue
            shifted = tuple(n - 1 if j == i else n for j, n in enumerate(theta))
            value = table.entries.get(shifted)
            if value is not None:
                rhs = rhs + (2 * half_norms[i]) * value
        out.append(TodaResidual(theta, lhs - rhs))
    return out


def residual_report(residuals):
    """JSON text: [{"content": [...], "residual": str, "ok": bool}, ...]."""
    items = [
        {
            "content": list(r.content),
            "residual": str(r.residual),
            "ok": r.ok,
        }
        for r in residuals
    ]
    return json.dumps(items, indent=2, separators=(",", ": ")) + "\n"

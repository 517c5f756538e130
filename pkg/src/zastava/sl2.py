"""Rank-one golden values: closed-form series coefficients and the explicit
Verma-module action used to cross-check the general machinery.

Basis m_0, m_1, ... of the lowest-weight module with parameter lam:

    e . m_d = m_{d+1}
    h . m_d = (lam + 2d + 1) m_d
    f . m_d = -d (lam + d) m_{d-1}      (so f kills m_0)

The contravariant pairing with <m_0, m_0> = 1 gives
<m_d, m_d> = (-1)^d d! prod_{i=1..d} (lam + i), and with lam = a1/h the
degree-d series coefficient is tied to it by
(-1)^d A_d = h^(-2d) / <m_d, m_d>.
"""

from fractions import Fraction

from .errors import UsageError
from .rationals import Polynomial, RationalFunction

SL2_VARS = ("a1", "h")


def closed_form_a(d):
    """A_d = 1 / (d! h^d prod_{i=1..d} (a1 + i h)) over vars (a1, h)."""
    if d < 0:
        raise UsageError("degree must be >= 0")
    a = Polynomial.variable(SL2_VARS, "a1")
    h = Polynomial.variable(SL2_VARS, "h")
    den = Polynomial.const(SL2_VARS, Fraction(_factorial(d))) * h**d
    for i in range(1, d + 1):
        den = den * (a + i * h)
    return RationalFunction(Polynomial.const(SL2_VARS, 1), den)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def sl2_verma_action(op, d, lam):
    """Apply one generator to m_d; returns (coefficient, target index).

    ``lam`` is a RationalFunction (typically symbolic).  When the result is
    zero (f on m_0) the coefficient is zero and the target is None.
    """
    if d < 0:
        raise UsageError("basis index must be >= 0")
    one = RationalFunction.one(lam.vars)
    if op == "e":
        return one, d + 1
    if op == "h":
        return lam + 2 * d + 1, d
    if op == "f":
        if d == 0:
            return RationalFunction.zero(lam.vars), None
        return -d * (lam + d), d - 1
    raise UsageError(f"unknown operator {op!r}")


def apply_sl2_word(word, state, lam):
    """Apply a string of generators (rightmost acts first) to a state dict
    {index: coefficient}; used to check the operator identities."""
    for op in reversed(word):
        out = {}
        for d, coeff in state.items():
            if coeff.is_zero():
                continue
            c, target = sl2_verma_action(op, d, lam)
            if target is None or c.is_zero():
                continue
            term = c * coeff
            prev = out.get(target)
            out[target] = term if prev is None else prev + term
        state = {k: v for k, v in out.items() if not v.is_zero()}
    return state


def sl2_gram_value(d, lam):
    """<m_d, m_d> = (-1)^d d! prod_{i=1..d} (lam + i)."""
    out = RationalFunction.constant(lam.vars, Fraction((-1) ** d * _factorial(d)))
    for i in range(1, d + 1):
        out = out * (lam + i)
    return out

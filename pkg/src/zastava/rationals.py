"""Exact sparse multivariate arithmetic.

Everything downstream works over the field Q(a_1..a_r, eps, h).  Scalars are
``fractions.Fraction`` (arbitrary precision, always reduced, denominator > 0).
Polynomials are sparse dicts mapping exponent tuples to nonzero Fractions,
ordered graded-lexicographically for display and leading-term logic.  Rational
functions are kept fully reduced with a canonically normalized denominator, so
equal values are equal objects component-wise and serialize to identical bytes.

No floats, no factorization, no Groebner machinery: gcds go through integer
content extraction plus a subresultant pseudo-remainder sequence, and linear
solving is fraction-free (Bareiss) with checked exact divisions.
"""

from fractions import Fraction
from math import gcd as _int_gcd

_F0 = Fraction(0)
_F1 = Fraction(1)


class ExactDivisionError(ArithmeticError):
    """A division that was supposed to be exact left a remainder."""


class PoleError(ArithmeticError):
    """Evaluation hit a zero denominator."""


class SolveInconsistentError(Exception):
    """Linear system has no solution; ``row`` is the first failing row index."""

    def __init__(self, row):
        super().__init__(f"inconsistent linear system: residual nonzero at row {row}")
        self.row = row


def _grlex(exponents):
    return (sum(exponents), exponents)


class Polynomial:
    """Sparse multivariate polynomial over Q.

    ``vars`` is a fixed tuple of variable names; ``terms`` maps exponent
    tuples (one entry per variable) to nonzero Fraction coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        for exps, coeff in terms.items():
            if len(exps) != n:
                raise ValueError(f"exponent tuple {exps} does not match variables {self.vars}")
            if not isinstance(coeff, Fraction):
                coeff = Fraction(coeff)
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def const(cls, variables, value):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: _F1})

    @classmethod
    def monomial(cls, variables, exps, coeff=1):
        return cls(variables, {tuple(exps): Fraction(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if self.is_zero():
            return _F0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, index):
        if not self.terms:
            return -1
        return max(e[index] for e in self.terms)

    def leading_exponent(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=_grlex)

    def leading_coefficient(self):
        return self.terms[self.leading_exponent()]

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self})"

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.vars, other)
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _F0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.vars)
            return Polynomial(self.vars, {e: k * c for e, k in self.terms.items()})
        self._check_compatible(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero(self.vars)
        if len(a) > len(b):
            a, b = b, a
        # integer fast path: the solver keeps everything over Z, where Fraction
        # normalization per product is pure overhead
        if all(c.denominator == 1 for c in a.values()) and all(
            c.denominator == 1 for c in b.values()
        ):
            ai = [(e, c.numerator) for e, c in a.items()]
            bi = [(e, c.numerator) for e, c in b.items()]
            acc = {}
            for ea, ca in ai:
                for eb, cb in bi:
                    key = tuple(x + y for x, y in zip(ea, eb))
                    acc[key] = acc.get(key, 0) + ca * cb
            return Polynomial(self.vars, {e: Fraction(v) for e, v in acc.items() if v})
        acc = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                acc[key] = acc.get(key, _F0) + ca * cb
        return Polynomial(self.vars, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base_needed = n > 1
            if base_needed:
                base = base * base
            n >>= 1
        return out

    def exact_div(self, divisor):
        """Exact quotient self / divisor; raises ExactDivisionError otherwise."""
        if isinstance(divisor, (int, Fraction)):
            c = Fraction(divisor)
            if not c:
                raise ZeroDivisionError("division by zero")
            return Polynomial(self.vars, {e: k / c for e, k in self.terms.items()})
        self._check_compatible(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if len(divisor.terms) == 1:
            (de, dc), = divisor.terms.items()
            out = {}
            for e, c in self.terms.items():
                ne = tuple(x - y for x, y in zip(e, de))
                if any(x < 0 for x in ne):
                    raise ExactDivisionError("monomial does not divide all terms")
                out[ne] = c / dc
            return Polynomial(self.vars, out)
        rem = dict(self.terms)
        out = {}
        dlead = divisor.leading_exponent()
        dlc = divisor.terms[dlead]
        while rem:
            e = max(rem, key=_grlex)
            ne = tuple(x - y for x, y in zip(e, dlead))
            if any(x < 0 for x in ne):
                raise ExactDivisionError("leading term not divisible")
            q = rem[e] / dlc
            out[ne] = out.get(ne, _F0) + q
            for de2, dc2 in divisor.terms.items():
                te = tuple(x + y for x, y in zip(ne, de2))
                nv = rem.get(te, _F0) - q * dc2
                if nv:
                    rem[te] = nv
                else:
                    rem.pop(te, None)
        return Polynomial(self.vars, out)

    # -- content and normalization ----------------------------------------

    def content_and_primitive(self):
        """Split as content * primitive with content a positive Fraction and
        the primitive part having coprime integer coefficients."""
        if self.is_zero():
            return _F0, self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // _int_gcd(den, c.denominator)
        g = 0
        scaled = {}
        for e, c in self.terms.items():
            v = c.numerator * (den // c.denominator)
            scaled[e] = v
            g = _int_gcd(g, v)
        prim = Polynomial(self.vars, {e: Fraction(v // g) for e, v in scaled.items()})
        return Fraction(g, den), prim

    def with_positive_leading(self):
        if not self.is_zero() and self.leading_coefficient() < 0:
            return -self
        return self

    def evaluate(self, point):
        """Evaluate at a dict name -> Fraction; every variable must be given."""
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise ValueError(f"missing values for {missing}")
        vals = [Fraction(point[v]) for v in self.vars]
        total = _F0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v**k
            total += term
        return total

    def extend(self, variables):
        """Reinterpret over a larger variable tuple (superset, any order)."""
        variables = tuple(variables)
        pos = []
        for v in self.vars:
            if v not in variables:
                raise ValueError(f"variable {v} absent from {variables}")
            pos.append(variables.index(v))
        n = len(variables)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for p, k in zip(pos, e):
                ne[p] = k
            out[tuple(ne)] = c
        return Polynomial(variables, out)

    def __str__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# gcd


def poly_gcd(p, q):
    """Greatest common divisor, normalized primitive with positive leading
    (graded-lex) coefficient.  gcd(p, 0) is the normalization of p."""
    if p.vars != q.vars:
        raise ValueError("variable mismatch in gcd")
    if p.is_zero() and q.is_zero():
        return p
    if p.is_zero():
        return q.content_and_primitive()[1].with_positive_leading()
    if q.is_zero():
        return p.content_and_primitive()[1].with_positive_leading()
    P = p.content_and_primitive()[1]
    Q = q.content_and_primitive()[1]
    g = _gcd_int(P, Q)
    return g.content_and_primitive()[1].with_positive_leading()


def _min_exponents(p):
    it = iter(p.terms)
    lo = list(next(it))
    for e in it:
        for i, k in enumerate(e):
            if k < lo[i]:
                lo[i] = k
    return lo


def _gcd_int(P, Q):
    """gcd of integer-coefficient polynomials, up to sign and content details
    cleaned up by the caller."""
    if P.is_zero():
        return Q
    if Q.is_zero():
        return P
    if P == Q:
        return P
    if P.is_constant() or Q.is_constant():
        cp = P.content_and_primitive()[0]
        cq = Q.content_and_primitive()[0]
        return Polynomial.const(P.vars, _int_gcd(cp.numerator, cq.numerator))
    if len(P.terms) == 1 or len(Q.terms) == 1:
        # common monomial divisor; contents are integers
        lo = [min(a, b) for a, b in zip(_min_exponents(P), _min_exponents(Q))]
        cp = P.content_and_primitive()[0]
        cq = Q.content_and_primitive()[0]
        return Polynomial.monomial(P.vars, lo, _int_gcd(cp.numerator, cq.numerator))
    v = next(
        i for i in range(len(P.vars)) if P.degree_in(i) > 0 or Q.degree_in(i) > 0
    )
    contP = _content_in(P, v)
    contQ = _content_in(Q, v)
    c = _gcd_int(contP, contQ)
    if P.degree_in(v) == 0 or Q.degree_in(v) == 0:
        return c
    A = P.exact_div(contP)
    B = Q.exact_div(contQ)
    if A.degree_in(v) < B.degree_in(v):
        A, B = B, A
    return c * _subresultant_gcd(A, B, v)


def _coeff_in(p, v, k):
    """Coefficient of x_v^k as a polynomial with the v-exponent zeroed."""
    out = {}
    for e, c in p.terms.items():
        if e[v] == k:
            ne = list(e)
            ne[v] = 0
            out[tuple(ne)] = c
    return Polynomial(p.vars, out)


def _content_in(p, v):
    g = Polynomial.zero(p.vars)
    for k in range(p.degree_in(v) + 1):
        c = _coeff_in(p, v, k)
        if not c.is_zero():
            g = _gcd_int(g, c)
    return g


def _pseudo_rem(A, B, v):
    dB = B.degree_in(v)
    lead = _coeff_in(B, v, dB)
    R = A
    e = A.degree_in(v) - dB + 1
    xv = Polynomial.variable(A.vars, A.vars[v])
    while not R.is_zero() and R.degree_in(v) >= dB:
        k = R.degree_in(v) - dB
        R = lead * R - _coeff_in(R, v, R.degree_in(v)) * xv**k * B
        e -= 1
    if e > 0:
        R = lead**e * R
    return R

def _subresultant_gcd(A, B, v):
    """Primitive gcd in x_v of polynomials primitive in x_v, via the
    subresultant pseudo-remainder sequence."""
    one = Polynomial.const(A.vars, 1)
    g = h = one
    while True:
        delta = A.degree_in(v) - B.degree_in(v)
        R = _pseudo_rem(A, B, v)
        if R.is_zero():
            return B.exact_div(_content_in(B, v))
        if R.degree_in(v) == 0:
            return one
        A, B = B, R.exact_div(g * h**delta)
        g = _coeff_in(A, v, A.degree_in(v))
        if delta == 0:
            continue
        h = (g**delta).exact_div(h ** (delta - 1)) if delta > 1 else g


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """Reduced fraction of polynomials in canonical form.

    Invariants: numerator and denominator are coprime with integer
    coefficients, the gcd of their integer contents is 1, and the
    denominator's graded-lex leading coefficient is positive.  Zero is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Polynomial.const(num.vars, 1)
        if num.vars != den.vars:
            raise ValueError("variable mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = num
            self.den = Polynomial.const(num.vars, 1)
            return
        g = poly_gcd(num, den)
        if not (g.is_constant() and g.constant_value() == 1):
            num = num.exact_div(g)
            den = den.exact_div(g)
        cn, pn = num.content_and_primitive()
        cd, pd = den.content_and_primitive()
        if pd.leading_coefficient() < 0:
            pn, pd = -pn, -pd
        s = cn / cd
        self.num = pn * s.numerator
        self.den = pd * s.denominator

    @classmethod
    def _reduced(cls, num, den):
        """Build from a fraction already known to be in lowest polynomial
        terms; only the scalar normalization is applied."""
        self = object.__new__(cls)
        if num.is_zero():
            self.num = num
            self.den = Polynomial.const(num.vars, 1)
            return self
        cn, pn = num.content_and_primitive()
        cd, pd = den.content_and_primitive()
        if pd.leading_coefficient() < 0:
            pn, pd = -pn, -pd
        s = cn / cd
        self.num = pn * s.numerator
        self.den = pd * s.denominator
        return self

    @classmethod
    def zero(cls, variables):
        return cls(Polynomial.zero(variables))

    @classmethod
    def one(cls, variables):
        return cls(Polynomial.const(variables, 1))

    @classmethod
    def constant(cls, variables, value):
        return cls(Polynomial.const(variables, value))

    @classmethod
    def from_variable(cls, variables, name):
        return cls(Polynomial.variable(variables, name))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        return format_rational(self)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g0 = poly_gcd(self.den, other.den)
        if g0.is_constant():
            num = self.num * other.den + other.num * self.den
            if num.is_zero():
                return RationalFunction.zero(self.vars)
            return RationalFunction._reduced(num, self.den * other.den)
        d1 = self.den.exact_div(g0)
        d2 = other.den.exact_div(g0)
        t = self.num * d2 + other.num * d1
        if t.is_zero():
            return RationalFunction.zero(self.vars)
        g1 = poly_gcd(t, g0)
        if g1.is_constant():
            return RationalFunction._reduced(t, d1 * other.den)
        return RationalFunction._reduced(
            t.exact_div(g1), d1 * other.den.exact_div(g1)
        )

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero(self.vars)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1.is_constant() else self.num.exact_div(g1)
        d2 = other.den if g1.is_constant() else other.den.exact_div(g1)
        n2 = other.num if g2.is_constant() else other.num.exact_div(g2)
        d1 = self.den if g2.is_constant() else self.den.exact_div(g2)
        return RationalFunction._reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        out = object.__new__(RationalFunction)
        out.num = num
        out.den = den
        return out

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, n):
        if n < 0:
            return self.reciprocal() ** (-n)
        out = RationalFunction.one(self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleError(f"denominator vanishes at {point}")
        return self.num.evaluate(point) / d

    def extend(self, variables):
        return RationalFunction._reduced(
            self.num.extend(variables), self.den.extend(variables)
        )


# ---------------------------------------------------------------------------
# matrices and linear solving


class Matrix:
    """Dense matrix of RationalFunction entries."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return list(self.entries[i])

    def is_symmetric(self):
        if self.nrows != self.ncols:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.nrows)
            for j in range(i)
        )

    def apply(self, vector):
        if len(vector) != self.ncols:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.entries:
            acc = None
            for entry, x in zip(row, vector):
                term = entry * x
                acc = term if acc is None else acc + term
            out.append(acc)
        return out


def _poly_lcm(a, b):
    g = poly_gcd(a, b)
    return a * b.exact_div(g) if not g.is_constant() else a * b


def solve_consistent(matrix, rhs, expected_rank=None, certificate=False):
    """One solution of matrix * x = rhs over the rational-function field.

    Free variables (columns without a pivot) are set to 0.  The computation is
    fraction-free: rows are cleared to polynomial form, reduced by incremental
    Bareiss elimination with checked exact divisions, and back-substituted
    over the pivot block whose determinant serves as common denominator.
    Every original row is then checked against the candidate solution by a
    polynomial identity; the first failing row raises SolveInconsistentError
    with that row's index.  ``expected_rank`` optionally stops pivot hunting
    early (correctness is still guaranteed by the verification pass).  With
    ``certificate=True`` the return value is (solution, numerators, det):
    polynomial numerators per pivot column over the common denominator det,
    useful when the caller wants to keep verifying identities fraction-free.
    """
    if isinstance(matrix, Matrix):
        rows = [matrix.row(i) for i in range(matrix.nrows)]
    else:
        rows = [list(r) for r in matrix]
    n = len(rows)
    if len(rhs) != n:
        raise ValueError("rhs length mismatch")
    if n == 0:
        return []
    m = len(rows[0])
    variables = rows[0][0].vars if m else rhs[0].vars
    one = Polynomial.const(variables, 1)

    cleared = []
    for row, b in zip(rows, rhs):
        full = list(row) + [b]
        scale = one
        for entry in full:
            if not entry.den.is_constant() or entry.den.constant_value() != 1:
                scale = _poly_lcm(scale, entry.den)
        cleared.append([e.num * scale.exact_div(e.den) for e in full])

    pivots = []  # (reduced row, pivot column, pivot value)
    ladder = [one]  # ladder[k] divides at step k; ladder[0] = 1
    for idx, vec in enumerate(cleared):
        if expected_rank is not None and len(pivots) >= expected_rank:
            break
        v = list(vec)
        for k, (prow, pcol, pval) in enumerate(pivots):
            coef = v[pcol]
            prev = ladder[k]
            if coef.is_zero():
                v = [x * pval if not x.is_zero() else x for x in v]
            else:
                v = [pval * x - coef * y for x, y in zip(v, prow)]
            if k:
                v = [x.exact_div(prev) if not x.is_zero() else x for x in v]
        pivcol = next((j for j in range(m) if not v[j].is_zero()), None)
        if pivcol is None:
            if not v[m].is_zero():
                raise SolveInconsistentError(idx)
            continue
        pivots.append((v, pivcol, v[pivcol]))
        ladder.append(v[pivcol])

    r = len(pivots)
    det = pivots[-1][2] if r else one
    numerators = {}
    for j in range(r - 1, -1, -1):
        vj, cj, dj = pivots[j]
        acc = vj[-1] * det
        for k in range(j + 1, r):
            ck = pivots[k][1]
            if not vj[ck].is_zero():
                acc = acc - vj[ck] * numerators[ck]
        numerators[cj] = acc.exact_div(dj)

    zero = RationalFunction.zero(variables)
    solution = [zero] * m
    for c, numer in numerators.items():
        solution[c] = RationalFunction(numer, det)

    # verification doubles as the inconsistency detector
    for idx, vec in enumerate(cleared):
        acc = Polynomial.zero(variables)
        for c, numer in numerators.items():
            if not vec[c].is_zero():
                acc = acc + vec[c] * numer
        if acc != vec[m] * det:
            raise SolveInconsistentError(idx)
    if certificate:
        return solution, numerators, det
    return solution


# ---------------------------------------------------------------------------
# formatting and parsing


def format_polynomial(p):
    """Canonical string: graded-lex descending, ' + '/' - ' separators,
    exponents as ^, explicit * between coefficient and variables."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, key=_grlex, reverse=True):
        c = p.terms[e]
        mono = "*".join(
            v if k == 1 else f"{v}^{k}" for v, k in zip(p.vars, e) if k
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


def format_rational(f):
    return f"({format_polynomial(f.num)}) / ({format_polynomial(f.den)})"


_TOKEN_CHARS = set("+-*/^()")


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j]))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in _TOKEN_CHARS:
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    return tokens


class _Parser:
    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.pos = 0
        self.vars = tuple(variables)

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise ValueError("unexpected end of input")
        k, v = self.tokens[self.pos]
        if kind is not None and k != kind:
            raise ValueError(f"expected {kind!r}, found {v!r}")
        self.pos += 1
        return v

    def parse_poly(self):
        terms = {}
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        self._term(terms, sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            self._term(terms, sign)
        return Polynomial(self.vars, terms)

    def _term(self, terms, sign):
        coeff = Fraction(sign)
        exps = [0] * len(self.vars)
        while True:
            kind = self.peek()
            if kind == "num":
                value = int(self.take())
                if self.peek() == "/" and self._next_is_number():
                    self.take()
                    value = Fraction(value, int(self.take("num")))
                coeff *= value
            elif kind == "name":
                name = self.take()
                if name not in self.vars:
                    raise ValueError(f"unknown variable {name!r}")
                power = 1
                if self.peek() == "^":
                    self.take()
                    power = int(self.take("num"))
                exps[self.vars.index(name)] += power
            else:
                raise ValueError(f"unexpected token in term: {kind!r}")
            if self.peek() == "*":
                self.take()
                continue
            break
        key = tuple(exps)
        prev = terms.get(key, _F0) + coeff
        if prev:
            terms[key] = prev
        else:
            terms.pop(key, None)

    def _next_is_number(self):
        return (
            self.pos + 1 < len(self.tokens)
            and self.tokens[self.pos + 1][0] == "num"
        )

    def expect_end(self):
        if self.pos != len(self.tokens):
            raise ValueError(f"trailing input at {self.tokens[self.pos][1]!r}")


def parse_polynomial(text, variables):
    parser = _Parser(_tokenize(text), variables)
    poly = parser.parse_poly()
    parser.expect_end()
    return poly


def parse_rational(text, variables):
    """Parse the canonical "(num) / (den)" form; a bare polynomial is
    accepted and treated as having denominator 1."""
    tokens = _tokenize(text)
    parser = _Parser(tokens, variables)
    if parser.peek() == "(":
        parser.take("(")
        num = parser.parse_poly()
        parser.take(")")
        if parser.peek() is None:
            return RationalFunction(num)
        parser.take("/")
        parser.take("(")
        den = parser.parse_poly()
        parser.take(")")
        parser.expect_end()
        return RationalFunction(num, den)
    poly = parser.parse_poly()
    parser.expect_end()
    return RationalFunction(poly)

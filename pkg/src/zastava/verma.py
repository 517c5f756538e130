"""Lowest-weight word calculus: contravariant Gram matrices and Whittaker
vector components.

A weight space of content theta is spanned by words in the raising
generators, one letter per simple-root index (node order; for affine data
the 0-node is the last index).  Lowering a word acts term by term:

    f_i . (e_{j_1} ... e_{j_k} v)
        = sum over positions m with j_m = i of
          -(lam(h_i) + sum_{l > m} A[i][j_l]) * (word with letter m removed)

and the contravariant pairing is defined by <e_i x, y> = <x, f_i y> with
<v, v> = 1.  The Whittaker component at theta solves

    <w_theta, u> = h^(-height(theta))   for every word u of content theta,

a consistent but highly rank-deficient linear system over the word basis
(rank = Kostant partition count); any solution gives the same norm
h^(-height) * sum of coefficients, which is the quantity the series layer
consumes.

Internally every pairing at depth k is a polynomial divided by exactly h^k
(each lowering step contributes one factor of 1/h), so the recursion runs on
integer-coefficient numerator polynomials with no rational normalization at
all.  The defining system, cleared of denominators, reads P c = 1 with P the
numerator matrix; it is solved on a small invertible block (rows/columns
located by exact integer elimination of P evaluated at a deterministic probe
point) and the candidate is then verified fraction-free against every row.
The verification is what makes the answer exact; the probe point only picks
the block, and a degenerate point just triggers a retry with the next one.
"""

from fractions import Fraction

from .cartan import height, kostant_partition
from .errors import ResourceLimitError
from .rationals import (
    Matrix,
    Polynomial,
    RationalFunction,
    SolveInconsistentError,
    solve_consistent,
)

DEFAULT_FINITE_HEIGHT_CAP = 8
DEFAULT_AFFINE_HEIGHT_CAP = 6


def finite_variables(rank):
    return tuple(f"a{i}" for i in range(1, rank + 1)) + ("h",)


def affine_variables(rank):
    return tuple(f"a{i}" for i in range(1, rank + 1)) + ("eps", "h")


class LowestWeight:
    """The vector of values lam(h_i), one RationalFunction per node."""

    __slots__ = ("values",)

    def __init__(self, values):
        vals = tuple(values)
        if not vals:
            raise ValueError("empty weight")
        variables = vals[0].vars
        for v in vals:
            if v.vars != variables:
                raise ValueError("weight components over different variables")
        if "h" not in variables:
            raise ValueError("weight variables must include h")
        self.values = vals

    @property
    def vars(self):
        return self.values[0].vars

    def __len__(self):
        return len(self.values)


def standard_lowest_weight(rank):
    """lam(h_i) = (a_i + h)/h over variables (a_1..a_r, h)."""
    variables = finite_variables(rank)
    h = Polynomial.variable(variables, "h")
    vals = []
    for i in range(1, rank + 1):
        ai = Polynomial.variable(variables, f"a{i}")
        vals.append(RationalFunction(ai + h, h))
    return LowestWeight(vals)


def affine_lowest_weight(working, input_marks):
    """Finite nodes get (a_i + h)/h; the affine node gets
    (eps - sum_i m_i a_i + h)/h with m the marks of the input diagram
    (equivalently the comarks of the working dual diagram).
    """
    rank = working.finite_rank
    if len(input_marks) != working.size:
        raise ValueError("marks length mismatch")
    if input_marks[working.affine_node] != 1:
        raise ValueError("catalog affine types must have 0-node mark 1")
    variables = affine_variables(rank)
    h = Polynomial.variable(variables, "h")
    eps = Polynomial.variable(variables, "eps")
    vals = []
    for i in range(1, rank + 1):
        ai = Polynomial.variable(variables, f"a{i}")
        vals.append(RationalFunction(ai + h, h))
    top = eps
    for i in range(1, rank + 1):
        top = top - input_marks[i - 1] * Polynomial.variable(variables, f"a{i}")
    vals.append(RationalFunction(top + h, h))
    return LowestWeight(vals)


def words_for_content(theta):
    """All words with the given letter multiplicities, ascending lex."""
    n = len(theta)
    total = height(theta)
    counts = list(theta)
    word = []
    out = []

    def rec():
        if len(word) == total:
            out.append(tuple(word))
            return
        for i in range(n):
            if counts[i]:
                counts[i] -= 1
                word.append(i)
                rec()
                word.pop()
                counts[i] += 1

    rec()
    return out


def content_of_word(word, size):
    counts = [0] * size
    for letter in word:
        counts[letter] += 1
    return tuple(counts)


class WeightSpaceModel:
    """Word basis and Gram matrix of one weight space."""

    __slots__ = ("content", "words", "gram")

    def __init__(self, content, words, gram):
        self.content = tuple(content)
        self.words = tuple(words)
        self.gram = gram


class WhittakerComponent:
    """Solved component: coefficients over the word basis plus its norm."""

    __slots__ = ("content", "words", "coefficients", "norm")

    def __init__(self, content, words, coefficients, norm):
        self.content = tuple(content)
        self.words = tuple(words)
        self.coefficients = tuple(coefficients)
        self.norm = norm


def dual_sign_component(theta):
    """(-1)^height(theta), the sign relating norms to series coefficients."""
    return Fraction(-1) ** height(theta)


def _eval_int(poly, pow_tab):
    """Evaluate at the probe point encoded by per-variable power tables."""
    total = 0
    extra = None
    for e, c in poly.terms.items():
        m = 1
        for vi, k in enumerate(e):
            if k:
                m *= pow_tab[vi][k]
        if c.denominator == 1:
            total += c.numerator * m
        else:
            extra = (extra if extra is not None else Fraction(0)) + c * m
    return total if extra is None else extra + total


def _point_block(numer_rows, values):
    """Pivot rows/columns of the numerator matrix evaluated at an integer
    point, found by fraction-free elimination (exact; the point only decides
    which block gets picked)."""
    max_deg = [0] * len(values)
    for row in numer_rows:
        for p in row:
            for e in p.terms:
                for vi, k in enumerate(e):
                    if k > max_deg[vi]:
                        max_deg[vi] = k
    pow_tab = []
    for vi, val in enumerate(values):
        tab = [1]
        for _ in range(max_deg[vi]):
            tab.append(tab[-1] * val)
        pow_tab.append(tab)
    M = [[_eval_int(p, pow_tab) for p in row] for row in numer_rows]
    m = len(M[0]) if M else 0
    active = list(range(len(M)))
    piv_rows, piv_cols = [], []
    prev = 1
    for col in range(m):
        pr = next((i for i in active if M[i][col] != 0), None)
        if pr is None:
            continue
        pv = M[pr][col]
        active.remove(pr)
        for i in active:
            ci = M[i][col]
            M[i] = [(pv * x - ci * y) // prev for x, y in zip(M[i], M[pr])]
        piv_rows.append(pr)
        piv_cols.append(col)
        prev = pv
    return piv_rows, piv_cols


class VermaModule:
    """Computation context: Cartan datum + lowest weight + shared memo tables.

    All public values are pure functions of (datum, weight, theta); the memo
    dictionaries are an internal cache shared across weight spaces so that
    pairings of deep words reuse shallow ones.  Weight values must have
    denominator dividing h (true for the standard and affine weights and for
    polynomial symbolic weights), which is what keeps the pairing recursion
    in polynomial space.
    """

    def __init__(self, datum, lam, height_cap=None):
        if len(lam) != datum.size:
            raise ValueError("weight length must match Cartan size")
        self.datum = datum
        self.lam = lam
        if height_cap is None:
            height_cap = (
                DEFAULT_AFFINE_HEIGHT_CAP if datum.is_affine else DEFAULT_FINITE_HEIGHT_CAP
            )
        self.height_cap = height_cap
        self.vars = lam.vars
        self._one = RationalFunction.one(self.vars)
        self._zero = RationalFunction.zero(self.vars)
        self._h = Polynomial.variable(self.vars, "h")
        self._hinv = RationalFunction(Polynomial.const(self.vars, 1), self._h)
        self._poly_one = Polynomial.const(self.vars, 1)
        self._lam_nums = []
        for v in lam.values:
            scaled = v * RationalFunction(self._h)
            if not (scaled.den.is_constant() and scaled.den.constant_value() == 1):
                raise ValueError("weight values must have denominator dividing h")
            self._lam_nums.append(scaled.num)
        self._lower_memo = {}
        self._pair_memo = {}
        self._component_memo = {}

    def _check_cap(self, theta):
        if height(theta) > self.height_cap:
            raise ResourceLimitError(
                f"height {height(theta)} exceeds configured cap {self.height_cap}"
            )

    # -- word calculus (numerator space: one factor of 1/h per letter) -----

    def _lower_num(self, i, word):
        key = (i, word)
        cached = self._lower_memo.get(key)
        if cached is not None:
            return cached
        matrix_row = self.datum.matrix[i]
        lam_num = self._lam_nums[i]
        acc = {}
        tail = 0
        # walk from the right so the running pairing sum is O(1) per letter
        for m in range(len(word) - 1, -1, -1):
            if word[m] == i:
                coeff = -(lam_num + tail * self._h)
                shorter = word[:m] + word[m + 1 :]
                prev = acc.get(shorter)
                acc[shorter] = coeff if prev is None else prev + coeff
            tail += matrix_row[word[m]]
        result = tuple((c, w) for w, c in sorted(acc.items()) if not c.is_zero())
        self._lower_memo[key] = result
        return result

    def _pairing_num(self, u, v):
        if not u:
            return self._poly_one
        key = (u, v)
        cached = self._pair_memo.get(key)
        if cached is not None:
            return cached
        i, rest = u[0], u[1:]
        total = None
        for coeff, w in self._lower_num(i, v):
            sub = self._pairing_num(rest, w)
            if sub.is_zero():
                continue
            term = coeff * sub
            total = term if total is None else total + term
        if total is None:
            total = Polynomial.zero(self.vars)
        self._pair_memo[key] = total
        return total

    # -- public surface ----------------------------------------------------

    def apply_lowering(self, i, word):
        """f_i applied to a word vector; [(coefficient, word)] with like
        words merged, ordered by word."""
        return tuple(
            (RationalFunction(c, self._h), w) for c, w in self._lower_num(i, word)
        )

    def pairing(self, u, v):
        """Contravariant pairing of two word vectors."""
        if len(u) != len(v):
            return self._zero
        if content_of_word(u, self.datum.size) != content_of_word(v, self.datum.size):
            return self._zero
        return RationalFunction(self._pairing_num(u, v), self._h ** len(u))

    def gram_matrix(self, theta):
        """WeightSpaceModel at theta: all words of that content plus their
        symmetric Gram matrix of pairings."""
        theta = tuple(theta)
        self._check_cap(theta)
        words = words_for_content(theta)
        hpow = self._h ** height(theta)
        rows = []
        for u in words:
            rows.append(
                [RationalFunction(self._pairing_num(u, v), hpow) for v in words]
            )
        return WeightSpaceModel(theta, words, Matrix(rows))

    def whittaker_component(self, theta):
        """Solve <w_theta, u> = h^(-height) over the word basis.

        Clearing denominators turns the system into P c = 1 over the
        numerator matrix; a maximal invertible block is located via exact
        elimination at a probe point, solved fraction-free, and the candidate
        is verified against every row before being accepted.
        """
        theta = tuple(theta)
        cached = self._component_memo.get(theta)
        if cached is not None:
            return cached
        self._check_cap(theta)
        words = words_for_content(theta)
        n = len(words)
        numer = [[self._pairing_num(u, v) for v in words] for u in words]
        ht = height(theta)

        chosen = None
        for attempt in range(12):
            values = [
                1000003 + 9176 * (k + 1) ** 2 + 7919 * (attempt + 1) * (k + 3)
                for k in range(len(self.vars))
            ]
            piv_rows, piv_cols = _point_block(numer, values)
            if not piv_rows and n:
                continue
            block = Matrix(
                [
                    [RationalFunction(numer[i][j]) for j in piv_cols]
                    for i in piv_rows
                ]
            )
            ones = [self._one] * len(piv_rows)
            try:
                _, numerators, det = solve_consistent(block, ones, certificate=True)
            except SolveInconsistentError:
                continue
            full_numers = {
                piv_cols[local]: poly for local, poly in numerators.items()
            }
            if self._rows_verify(numer, full_numers, det):
                chosen = (full_numers, det)
                break
        if chosen is None:
            raise RuntimeError(
                f"no verifying block found for content {theta}; "
                "the rank structure is not as expected"
            )
        full_numers, det = chosen

        hpow_inv = self._hinv**ht
        zero = self._zero
        coeffs = [zero] * n
        total = None
        for col, numpoly in full_numers.items():
            coeffs[col] = RationalFunction(numpoly, det)
            total = numpoly if total is None else total + numpoly
        if total is None:
            total = Polynomial.zero(self.vars)
        norm = RationalFunction(total, det) * hpow_inv
        comp = WhittakerComponent(theta, words, coeffs, norm)
        self._component_memo[theta] = comp
        return comp

    @staticmethod
    def _rows_verify(numer, full_numers, det):
        for row in numer:
            acc = None
            for col, numpoly in full_numers.items():
                entry = row[col]
                if entry.is_zero():
                    continue
                term = entry * numpoly
                acc = term if acc is None else acc + term
            if acc is None:
                if not det.is_zero():
                    return False
            elif acc != det:
                return False
        return True

    def rank(self, theta):
        """Kostant partition count: the expected Gram rank at theta."""
        return kostant_partition(self.datum, tuple(theta))

    def verify_whittaker(self, theta, coefficients):
        """Check the defining recursion f_i w_theta = (1/h) w_{theta - alpha_i}
        against independently solved lower components, comparing both sides
        through pairings with every word of the lower content."""
        theta = tuple(theta)
        words = words_for_content(theta)
        if len(coefficients) != len(words):
            raise ValueError("coefficient count does not match word count")
        for i in range(self.datum.size):
            if theta[i] == 0:
                continue
            target = tuple(x - 1 if j == i else x for j, x in enumerate(theta))
            expanded = {}
            for u, cu in zip(words, coefficients):
                if cu.is_zero():
                    continue
                for coeff, w in self.apply_lowering(i, u):
                    term = cu * coeff
                    prev = expanded.get(w)
                    expanded[w] = term if prev is None else prev + term
            lower = self.whittaker_component(target)
            for y in words_for_content(target):
                lhs = self._zero
                for w, cw in expanded.items():
                    p = self.pairing(w, y)
                    if not p.is_zero():
                        lhs = lhs + cw * p
                rhs = self._zero
                for x, cx in zip(lower.words, lower.coefficients):
                    if cx.is_zero():
                        continue
                    p = self.pairing(x, y)
                    if not p.is_zero():
                        rhs = rhs + cx * p
                if lhs != self._hinv * rhs:
                    return False
        return True

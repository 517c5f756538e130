"""Partition-function tables: coefficientwise Z series from either pipeline,
the J-function relabeling, and JSON/CSV serialization.

A SeriesTable maps contents (nonnegative integer tuples over the node set,
affine 0-node last) to canonical rational functions, always including the
zero content with value 1 and every positive content within the cap.  Two
independent builders exist for each kind: the Whittaker pipeline (norms of
Whittaker-vector components over the dualized datum, signed by parity of
height) and the Toda recursion (the quadratic eigen-identity unfolded into a
triangular recursion seeded by Z_0 = 1).  Their exact entrywise agreement is
the headline cross-check; `zastava.toda` re-checks finished tables against
the identity independently of how they were built.
"""

import csv
import io
import json

from .cartan import (
    build_cartan,
    contents_up_to,
    dualize,
    form_matrix,
    form_pairing,
    height,
    null_vector,
)
from .errors import UsageError
from .rationals import Polynomial, RationalFunction, parse_rational
from .verma import (
    VermaModule,
    affine_lowest_weight,
    affine_variables,
    dual_sign_component,
    finite_variables,
    standard_lowest_weight,
)

PREFACTOR_TAG = "q^(a/hbar)"


def _sorted_contents(entries):
    return sorted(entries, key=lambda c: (height(c), c))


class SeriesTable:
    """Content -> canonical rational function, downward closed up to cap."""

    __slots__ = ("algebra", "cap", "entries", "variables", "metadata")

    def __init__(self, algebra, cap, entries, variables, metadata=None):
        self.algebra = algebra
        self.cap = cap
        self.entries = dict(entries)
        self.variables = tuple(variables)
        self.metadata = dict(metadata) if metadata else {}
        zero = (0,) * algebra.size
        if zero not in self.entries:
            raise ValueError("table must contain the zero content")
        one = RationalFunction.one(self.variables)
        if self.entries[zero] != one:
            raise ValueError("zero-content entry must be 1")
        for content in self.entries:
            if len(content) != algebra.size:
                raise ValueError(f"content {content} has wrong length")
            if any(n < 0 for n in content):
                raise ValueError(f"content {content} has a negative part")
            if height(content) > cap:
                raise ValueError(f"content {content} exceeds cap {cap}")

    def contents(self):
        """All contents, sorted by (height, lex)."""
        return _sorted_contents(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SeriesTable):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.cap == other.cap
            and self.entries == other.entries
            and self.metadata == other.metadata
        )

    def __repr__(self):
        return (
            f"SeriesTable({self.algebra.label!r}, cap={self.cap}, "
            f"{len(self.entries)} entries)"
        )


def _series_variables(datum):
    if datum.is_affine:
        return affine_variables(datum.finite_rank)
    return finite_variables(datum.size)


def z_series_whittaker(datum, cap):
    """Finite Z table from Whittaker components of the dualized datum:
    Z_theta = (-1)^height(theta) * norm(theta)."""
    if datum.is_affine:
        raise UsageError("z_series_whittaker expects a finite datum")
    if cap < 0:
        raise UsageError("cap must be nonnegative")
    variables = finite_variables(datum.size)
    vm = VermaModule(dualize(datum), standard_lowest_weight(datum.size), height_cap=cap)
    entries = {(0,) * datum.size: RationalFunction.one(variables)}
    for theta in contents_up_to(datum.size, cap):
        if not any(theta):
            continue
        comp = vm.whittaker_component(theta)
        entries[theta] = dual_sign_component(theta) * comp.norm
    return SeriesTable(datum, cap, entries, variables)


def _finite_form_data(working):
    """(half_norms, form) of the working (dual) datum: (a, alpha_i) is
    realized as half_norms[i] * a_i, and (theta, theta') via the form."""
    B = form_matrix(working)
    return B.half_norms, B


def z_series_toda(datum, cap):
    """Finite Z table from the unfolded quadratic Toda identity:
    (2h(a,theta) + h^2(theta,theta)) Z_theta = 2 sum_i d_i Z_{theta-alpha_i}
    with d_i = |alpha_i|^2/2 in the working normalization, seeded by Z_0 = 1.
    Shifts with a negative part contribute 0."""
    if datum.is_affine:
        raise UsageError("z_series_toda expects a finite datum")
    if cap < 0:
        raise UsageError("cap must be nonnegative")
    rank = datum.size
    variables = finite_variables(rank)
    working = dualize(datum)
    half_norms, B = _finite_form_data(working)
    h = RationalFunction(Polynomial.variable(variables, "h"))
    a = [RationalFunction(Polynomial.variable(variables, f"a{i}")) for i in range(1, rank + 1)]
    one = RationalFunction.one(variables)
    entries = {(0,) * rank: one}
    for theta in contents_up_to(rank, cap):
        if not any(theta):
            continue
        a_theta = RationalFunction.zero(variables)
        for i in range(rank):
            if theta[i]:
                a_theta = a_theta + (theta[i] * half_norms[i]) * a[i]
        theta_sq = form_pairing(B, theta, theta)
        lhs = 2 * h * a_theta + theta_sq * h * h
        rhs = RationalFunction.zero(variables)
        for i in range(rank):
            if theta[i] == 0:
                continue
            shifted = tuple(n - 1 if j == i else n for j, n in enumerate(theta))
            rhs = rhs + (2 * half_norms[i]) * entries[shifted]
        entries[theta] = rhs / lhs
    return SeriesTable(datum, cap, entries, variables)


def z_series_affine_whittaker(datum, cap):
    """Affine Z table (cap counts total content) from Whittaker components
    of the dualized affine datum, with the affine lowest weight built from
    the input diagram's marks."""
    if not datum.is_affine:
        raise UsageError("z_series_affine_whittaker expects an affine datum")
    if cap < 0:
        raise UsageError("cap must be nonnegative")
    variables = affine_variables(datum.finite_rank)
    marks = null_vector(datum)
    working = dualize(datum)
    vm = VermaModule(working, affine_lowest_weight(working, marks), height_cap=cap)
    entries = {(0,) * datum.size: RationalFunction.one(variables)}
    for theta in contents_up_to(datum.size, cap):
        if not any(theta):
            continue
        comp = vm.whittaker_component(theta)
        entries[theta] = dual_sign_component(theta) * comp.norm
    return SeriesTable(datum, cap, entries, variables)


def _affine_split(working, theta):
    """(n_0, finite part) of an affine content: n_0 is the 0-node coordinate
    and fin(theta)_i = n_i - n_0 * comark_i, the coefficient vector of the
    projection along the null direction."""
    comarks = null_vector(working)
    n0 = theta[working.affine_node]
    fin = tuple(
        theta[i] - n0 * comarks[i] for i in range(working.finite_rank)
    )
    return n0, fin


def z_series_affine_toda(datum, cap):
    """Affine Z table from the non-stationary quadratic identity:

        (2 h eps n_0 + 2 h (a, fin theta) + h^2 (fin theta, fin theta)) Z_theta
            = 2 sum_{i in affine nodes} d_i Z_{theta - alpha_i}

    with fin(.) the finite-part projection, d_i the affine half-norms, and
    shifts dropped once any coordinate goes negative.  Cap counts total
    content (= height of the affine content vector)."""
    if not datum.is_affine:
        raise UsageError("z_series_affine_toda expects an affine datum")
    if cap < 0:
        raise UsageError("cap must be nonnegative")
    size = datum.size
    rank = datum.finite_rank
    variables = affine_variables(rank)
    working = dualize(datum)
    B_aff = form_matrix(working)
    half_norms = B_aff.half_norms
    fin_B_rows = [row[:rank] for row in B_aff.entries[:rank]]
    h = RationalFunction(Polynomial.variable(variables, "h"))
    eps = RationalFunction(Polynomial.variable(variables, "eps"))
    a = [RationalFunction(Polynomial.variable(variables, f"a{i}")) for i in range(1, rank + 1)]
    one = RationalFunction.one(variables)
    entries = {(0,) * size: one}
    for theta in contents_up_to(size, cap):
        if not any(theta):
            continue
        n0, fin = _affine_split(working, theta)
        a_fin = RationalFunction.zero(variables)
        for i in range(rank):
            if fin[i]:
                a_fin = a_fin + (fin[i] * half_norms[i]) * a[i]
        fin_sq = sum(
            fin[i] * fin[j] * fin_B_rows[i][j] for i in range(rank) for j in range(rank)
        )
        lhs = (2 * n0) * h * eps + 2 * h * a_fin + fin_sq * h * h
        rhs = RationalFunction.zero(variables)
        for i in range(size):
            if theta[i] == 0:
                continue
            shifted = tuple(n - 1 if j == i else n for j, n in enumerate(theta))
            rhs = rhs + (2 * half_norms[i]) * entries[shifted]
        entries[theta] = rhs / lhs
    return SeriesTable(datum, cap, entries, variables)


def j_function(table):
    """The equivariant J-function: the same coefficient table carrying the
    prefactor descriptor (symbolic bookkeeping, not a rational function).
    Refused for affine tables: no affine J-function is constructed."""
    if table.algebra.is_affine:
        raise UsageError("no affine J-function is available; use the Z table")
    return SeriesTable(
        table.algebra,
        table.cap,
        table.entries,
        table.variables,
        metadata={"prefactor": PREFACTOR_TAG},
    )


# -- serialization ---------------------------------------------------------


def serialize_table(table):
    """Canonical JSON text (sorted entries, two-space indent, trailing
    newline); byte-stable for equal tables."""
    obj = {"algebra": table.algebra.label, "cap": table.cap}
    if table.metadata:
        obj["metadata"] = dict(sorted(table.metadata.items()))
    obj["entries"] = [
        {"content": list(content), "value": str(table.entries[content])}
        for content in table.contents()
    ]
    return json.dumps(obj, indent=2, separators=(",", ": ")) + "\n"


def parse_table(text):
    """Inverse of serialize_table; values re-parse through the canonical
    rational-function grammar."""
    obj = json.loads(text)
    try:
        label = obj["algebra"]
        cap = obj["cap"]
        raw_entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed table object: missing {exc}") from None
    datum = build_cartan(label)
    variables = _series_variables(datum)
    entries = {}
    for item in raw_entries:
        content = tuple(item["content"])
        entries[content] = parse_rational(item["value"], variables)
    metadata = obj.get("metadata")
    return SeriesTable(datum, cap, entries, variables, metadata=metadata)


def csv_table(table):
    """CSV text: a prefactor header row when present, then a column header,
    then one row per entry in (height, lex) order.  Affine tables carry the
    (d, finite part) annotation columns next to the raw content."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "prefactor" in table.metadata:
        writer.writerow(["prefactor", table.metadata["prefactor"]])
    affine = table.algebra.is_affine
    if affine:
        writer.writerow(["content", "d", "finite_content", "value"])
        working = dualize(table.algebra)
    else:
        writer.writerow(["content", "value"])
    for content in table.contents():
        joined = " ".join(str(n) for n in content)
        if affine:
            n0, fin = _affine_split(working, content)
            fin_joined = " ".join(str(n) for n in fin)
            writer.writerow([joined, n0, fin_joined, str(table.entries[content])])
        else:
            writer.writerow([joined, str(table.entries[content])])
    return buf.getvalue()

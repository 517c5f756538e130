"""Cartan data, root systems, and Kostant partition counting.

Conventions used throughout the package:

* Cartan matrices follow A[i][j] = <alpha_j, h_i> (row = coroot index), so
  for B2 = [[2,-1],[-2,2]] the first simple root is the long one.
* Affine diagrams append the 0-node LAST: node order (1, .., r, 0).  Contents
  (integer coordinate vectors over simple roots) use the same index order.
* Symmetrizers d satisfy d_i A_ij = d_j A_ji.  The invariant bilinear form is
  B_ij = d_i A_ij with d rescaled so the largest finite-type diagonal entry
  is 2 (long roots have squared length 2); for affine data the rescaling
  looks only at the finite nodes, so the finite sub-block is normalized
  identically to its finite counterpart.
* For affine data the imaginary roots k*delta (delta = primitive null vector)
  carry multiplicity equal to the finite rank; that value is correct for the
  untwisted types in the catalog and is asserted nowhere else.
"""

from fractions import Fraction

from .errors import UsageError

_BASE_MATRICES = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "A4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "C2": [[2, -2], [-1, 2]],
    "C3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "G2": [[2, -1], [-3, 2]],
    # affine: 0-node last
    "A1~": [[2, -2], [-2, 2]],
    "A2~": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
}

_AFFINE_LABELS = {"A1~", "A2~"}


class CartanDatum:
    """Validated (generalized) Cartan matrix with its symmetrizers."""

    def __init__(self, label, matrix, kind):
        self.label = label
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.kind = kind
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("Cartan matrix must be square")
        for i in range(n):
            if self.matrix[i][i] != 2:
                raise ValueError("diagonal entries must equal 2")
            for j in range(n):
                if i != j and self.matrix[i][j] > 0:
                    raise ValueError("off-diagonal entries must be <= 0")
                if (self.matrix[i][j] == 0) != (self.matrix[j][i] == 0):
                    raise ValueError("zero pattern must be symmetric")
        self.symmetrizers = _symmetrizers(self.matrix)
        det = _det(self.matrix)
        if kind == "finite":
            if det == 0:
                raise ValueError(f"{label}: singular matrix cannot be finite type")
        elif kind == "affine":
            if det != 0:
                raise ValueError(f"{label}: affine matrix must be singular")
        else:
            raise ValueError(f"unknown kind {kind!r}")

    @property
    def size(self):
        return len(self.matrix)

    @property
    def is_affine(self):
        return self.kind == "affine"

    @property
    def finite_rank(self):
        return self.size - 1 if self.is_affine else self.size

    @property
    def affine_node(self):
        if not self.is_affine:
            raise ValueError("finite type has no affine node")
        return self.size - 1

    def __eq__(self, other):
        return (
            isinstance(other, CartanDatum)
            and self.matrix == other.matrix
            and self.kind == other.kind
        )

    def __hash__(self):
        return hash((self.matrix, self.kind))

    def __repr__(self):
        return f"CartanDatum({self.label!r}, {self.kind})"


def _symmetrizers(matrix):
    """Positive integers d with d_i A_ij = d_j A_ji, gcd 1."""
    n = len(matrix)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or matrix[i][j] == 0:
                    continue
                val = d[i] * Fraction(matrix[i][j], matrix[j][i])
                if d[j] is None:
                    d[j] = val
                    stack.append(j)
                elif d[j] != val:
                    raise ValueError("matrix is not symmetrizable")
    for i in range(n):
        for j in range(n):
            if d[i] * matrix[i][j] != d[j] * matrix[j][i]:
                raise ValueError("matrix is not symmetrizable")
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd_int(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for v in ints:
        g = _gcd_int(g, v)
    return tuple(Fraction(v, g) for v in ints)


def _gcd_int(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _det(matrix):
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c]:
                factor = rows[r][c] / rows[c][c]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[c])]
    return det


def build_cartan(type_name):
    """Catalog lookup; accepts dual(...) wrappers, e.g. "dual(B2)"."""
    name = type_name.strip()
    if name.startswith("dual(") and name.endswith(")"):
        return dualize(build_cartan(name[5:-1]))
    if name not in _BASE_MATRICES:
        raise UsageError(f"unknown Cartan type {type_name!r}")
    kind = "affine" if name in _AFFINE_LABELS else "finite"
    return CartanDatum(name, _BASE_MATRICES[name], kind)


def dualize(c):
    """Transpose of the Cartan matrix (Langlands dual), same kind.

    Involutive up to the label wrapper: dual(dual(X)) is labeled X again.
    """
    label = c.label
    if label.startswith("dual(") and label.endswith(")"):
        label = label[5:-1]
    else:
        label = f"dual({label})"
    transposed = [list(col) for col in zip(*c.matrix)]
    return CartanDatum(label, transposed, c.kind)


def height(theta):
    """Sum of the content coordinates."""
    return sum(theta)


def pairing_with_coroot(c, beta, i):
    """<beta, h_i> for a content vector beta."""
    return sum(c.matrix[i][j] * beta[j] for j in range(c.size))


def positive_roots(c, height_cap=0):
    """Positive roots as (content, multiplicity) pairs, sorted by
    (height, content).

    Finite type: reflection closure starting from the simple roots; a cap of
    0 means no cap (the closure is finite).  Affine type: a positive cap is
    required; real roots come from the capped closure, and imaginary roots
    k*delta are appended with multiplicity = finite rank.
    """
    n = c.size
    if c.is_affine:
        if height_cap <= 0:
            raise UsageError("affine positive roots require a positive height cap")
    elif height_cap < 0:
        raise ValueError("height cap must be >= 0")

    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(n):
            pair = pairing_with_coroot(c, beta, i)
            refl = list(beta)
            refl[i] -= pair
            refl = tuple(refl)
            if refl in seen or any(x < 0 for x in refl):
                continue
            if height_cap and height(refl) > height_cap:
                continue
            seen.add(refl)
            queue.append(refl)

    out = [(beta, 1) for beta in seen]
    if c.is_affine:
        delta = null_vector(c)
        mult = c.finite_rank
        k = 1
        while k * height(delta) <= height_cap:
            out.append((tuple(k * x for x in delta), mult))
            k += 1
    out.sort(key=lambda pair: (height(pair[0]), pair[0]))
    return out


def null_vector(c):
    """Primitive positive integer vector spanning the kernel (affine only)."""
    if not c.is_affine:
        raise UsageError("null vector is defined for affine data only")
    n = c.size
    rows = [[Fraction(x) for x in row] for row in c.matrix]
    pivots = []  # (row index, column)
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivots.append((rank, col))
        rank += 1
    if rank != n - 1:
        raise ValueError(f"{c.label}: kernel dimension is {n - rank}, expected 1")
    free_col = next(j for j in range(n) if j not in {col for _, col in pivots})
    vec = [Fraction(0)] * n
    vec[free_col] = Fraction(1)
    for r, col in pivots:
        vec[col] = -rows[r][free_col]
    lcm = 1
    for x in vec:
        lcm = lcm * x.denominator // _gcd_int(lcm, x.denominator)
    ints = [int(x * lcm) for x in vec]
    g = 0
    for v in ints:
        g = _gcd_int(g, v)
    ints = [v // g for v in ints]
    if all(v < 0 for v in ints):
        ints = [-v for v in ints]
    elif not all(v > 0 for v in ints):
        raise ValueError(f"{c.label}: null vector is not strictly positive")
    return tuple(ints)


class FormMatrix:
    """Symmetrized bilinear form on the root lattice, long-root norm 2."""

    __slots__ = ("entries", "half_norms")

    def __init__(self, entries):
        self.entries = tuple(tuple(Fraction(x) for x in row) for row in entries)
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x != self.entries[j][i]:
                    raise ValueError("form matrix must be symmetric")
        self.half_norms = tuple(row[i] / 2 for i, row in enumerate(self.entries))

    @property
    def size(self):
        return len(self.entries)

    def __repr__(self):
        return f"FormMatrix({[list(map(str, r)) for r in self.entries]})"


def form_matrix(c):
    d = list(c.symmetrizers)
    finite_nodes = range(c.finite_rank) if c.is_affine else range(c.size)
    scale = max(d[i] for i in finite_nodes)
    entries = [
        [d[i] / scale * c.matrix[i][j] for j in range(c.size)]
        for i in range(c.size)
    ]
    return FormMatrix(entries)


def form_pairing(B, x, y):
    """(x, y) for content vectors under the symmetrized form."""
    if len(x) != B.size or len(y) != B.size:
        raise ValueError("content length mismatch")
    total = Fraction(0)
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = B.entries[i]
        for j, yj in enumerate(y):
            if yj:
                total += xi * row[j] * yj
    return total


def kostant_partition(c, theta):
    """Number of ways to write theta as a sum of positive roots (with
    imaginary roots counted by multiplicity for affine data)."""
    theta = tuple(theta)
    if len(theta) != c.size:
        raise ValueError("content length mismatch")
    if any(x < 0 for x in theta):
        raise ValueError("content must be nonnegative")
    if not any(theta):
        return 1
    cap = height(theta)
    roots = positive_roots(c, cap if c.is_affine else 0)
    roots = [
        (beta, mult)
        for beta, mult in roots
        if all(b <= t for b, t in zip(beta, theta))
    ]
    points = _box(theta)
    counts = {pt: 0 for pt in points}
    counts[(0,) * c.size] = 1
    for beta, mult in roots:
        for _ in range(mult):
            for pt in points:
                prev = tuple(p - b for p, b in zip(pt, beta))
                if all(x >= 0 for x in prev):
                    counts[pt] += counts[prev]
    return counts[theta]


def _box(theta):
    """Lattice points 0 <= pt <= theta, ascending lex."""
    points = [()]
    for t in theta:
        points = [pt + (k,) for pt in points for k in range(t + 1)]
    points.sort()
    return points


def contents_up_to(size, cap):
    """All nonnegative contents of height <= cap, sorted by (height, lex)."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == size:
            out.append(tuple(prefix))
            return
        for k in range(remaining + 1):
            rec(prefix + [k], remaining - k)

    rec([], cap)
    out.sort(key=lambda t: (height(t), t))
    return out

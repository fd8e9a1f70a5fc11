"""Exact rational and integer linear algebra.

Vectors are tuples, matrices are tuples of row tuples.  Rational entries are
:class:`fractions.Fraction`, integer entries are plain ``int`` (arbitrary
precision).  Nothing here ever touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionMismatch, SingularMatrix

__all__ = [
    "FinAbGroup",
    "SmithDecomposition",
    "cokernel",
    "det",
    "dot",
    "format_rat",
    "hermite",
    "integer_solve",
    "matmul",
    "nullspace",
    "parse_rat",
    "primitive",
    "rank",
    "smith",
    "solve",
    "transpose",
]


# --------------------------------------------------------------------------
# Scalars and small helpers
# --------------------------------------------------------------------------

def parse_rat(x):
    """Parse ``"p/q"``, ``"p"``, ints or Fractions into a Fraction.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rat(q):
    """Serialize a rational as ``"p/q"`` (or ``"p"`` when q = 1)."""
    return str(Fraction(q))


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), 0)


def transpose(A):
    return tuple(zip(*A))


def matmul(A, B):
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def primitive(v):
    """Scale a nonzero rational vector to the primitive integer vector on
    the same ray."""
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(x // g for x in ints)


# --------------------------------------------------------------------------
# Rational elimination
# --------------------------------------------------------------------------

def _rref(A):
    """Reduced row echelon form over Q. Returns (rows, pivot_columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(A):
    return len(_rref(A)[1])


def nullspace(A, ncols=None):
    """Basis of {x : A x = 0} over Q, as a tuple of Fraction vectors.

    ``ncols`` is needed only when ``A`` has no rows.
    """
    if not A:
        n = ncols
        return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    M, pivots = _rref(A)
    n = len(M[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, pc in zip(M, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return tuple(basis)


def det(A):
    """Exact determinant of a square rational (or integer) matrix."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionMismatch("det needs a square matrix")
    M = [[Fraction(x) for x in row] for row in A]
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            result = -result
        piv = M[c][c]
        result *= piv
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] / piv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return result


def solve(A, b):
    """Unique solution of the square system A x = b over Q."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise DimensionMismatch("solve needs a square system")
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    M, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(M[i][n] for i in range(n))


# --------------------------------------------------------------------------
# Integer normal forms
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with U, V unimodular and D diagonal, d1 | d2 | ..."""

    U: tuple
    D: tuple
    V: tuple

    @property
    def diagonal(self):
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


def _check_int_matrix(A):
    if not A or not A[0]:
        raise ValueError("matrix must be nonempty")
    k = len(A[0])
    if any(len(row) != k for row in A):
        raise DimensionMismatch("ragged matrix")
    for row in A:
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"non-integer entry {x}")
            elif not isinstance(x, int):
                raise TypeError(f"non-integer entry {x!r}")


def smith(A):
    """Smith normal form with transforms.

    Pivot rule: smallest nonzero absolute value in the active block,
    row-major tie-break.  Output is deterministic for a fixed input.
    """
    _check_int_matrix(A)
    r, k = len(A), len(A[0])
    D = [[int(x) for x in row] for row in A]
    U = [list(row) for row in identity(r)]
    V = [list(row) for row in identity(k)]

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def smallest(cells):
        best = None
        for i, j in cells:
            x = D[i][j]
            if x != 0 and (best is None or abs(x) < abs(D[best[0]][best[1]])):
                best = (i, j)
        return best

    for t in range(min(r, k)):
        pos = smallest((i, j) for i in range(t, r) for j in range(t, k))
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            p = D[t][t]
            for i in range(t + 1, r):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, k):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            cells = [(i, t) for i in range(t + 1, r)] + [(t, j) for j in range(t + 1, k)]
            pos = smallest(cells)
            if pos is not None:
                pos = smallest([(t, t)] + cells)
                swap_rows(t, pos[0])
                swap_cols(t, pos[1])
                continue
            bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, k)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    return SmithDecomposition(
        U=tuple(map(tuple, U)), D=tuple(map(tuple, D)), V=tuple(map(tuple, V))
    )


def _hermite_transform(A):
    """Row-style HNF with transform: returns (H, T) with T @ A == H.

    Pivots are positive; entries above a pivot lie in [0, pivot).  Zero rows
    are kept (at the bottom) so that T stays square.
    """
    _check_int_matrix(A)
    r, k = len(A), len(A[0])
    H = [[int(x) for x in row] for row in A]
    T = [list(row) for row in identity(r)]
    p = 0
    for c in range(k):
        if p == r:
            break
        while True:
            nz = [i for i in range(p, r) if H[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(H[i][c]), i))
            H[p], H[best] = H[best], H[p]
            T[p], T[best] = T[best], T[p]
            done = True
            for i in range(p + 1, r):
                if H[i][c]:
                    q = H[i][c] // H[p][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[p])]
                    T[i] = [a - q * b for a, b in zip(T[i], T[p])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if H[p][c] == 0:
            continue
        if H[p][c] < 0:
            H[p] = [-x for x in H[p]]
            T[p] = [-x for x in T[p]]
        for i in range(p):
            q = H[i][c] // H[p][c]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[p])]
                T[i] = [a - q * b for a, b in zip(T[i], T[p])]
        p += 1
    return tuple(map(tuple, H)), tuple(map(tuple, T))


def hermite(A):
    """Row Hermite normal form of an integer matrix, zero rows dropped."""
    H, _ = _hermite_transform(A)
    return tuple(row for row in H if any(row))


# --------------------------------------------------------------------------
# Finitely generated abelian groups
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FinAbGroup:
    """Z^rank plus cyclic factors Z/d with d >= 2 forming a divisibility chain."""

    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def torsion_order(self):
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def cokernel(A, ncols=None):
    """Presentation of Z^k / rowspan(A).

    Returns ``(group, images)`` where ``images[i]`` is the image of the i-th
    standard generator: free coordinates first, then one residue per
    invariant factor reduced into [0, d).  The free coordinates are put in
    Hermite form so the result does not depend on the SNF transforms, and
    torsion residues are zeroed on generators whose free part is a unit
    vector (where that normalization is available).
    """
    if not A:
        k = ncols
        return FinAbGroup(k), tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    k = len(A[0])
    snf = smith(A)
    diag = snf.diagonal
    rk = snf.rank
    torsion_cols = [j for j in range(rk) if diag[j] > 1]
    factors = tuple(diag[j] for j in torsion_cols)
    free_cols = list(range(rk, k))
    V = snf.V

    free = [[V[i][j] for j in free_cols] for i in range(k)]
    tors = [[V[i][j] % diag[j] for j in torsion_cols] for i in range(k)]

    if free_cols:
        H, _ = _hermite_transform(transpose(free))
        free = [list(col) for col in transpose(H)]
        for row in H:
            c = next((j for j, x in enumerate(row) if x), None)
            if c is None or row[c] != 1:
                continue
            shift = [-x for x in tors[c]]
            for i in range(k):
                tors[i] = [(t + row[i] * s) % d
                           for t, s, d in zip(tors[i], shift, factors)]

    images = tuple(tuple(f) + tuple(t) for f, t in zip(free, tors))
    return FinAbGroup(len(free_cols), factors), images


def integer_solve(A, b):
    """An integer solution of A x = b, or None if none exists."""
    snf = smith(A)
    r, k = len(A), len(A[0])
    Ub = [dot(row, b) for row in snf.U]
    diag = snf.diagonal
    y = [0] * k
    for i in range(r):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if Ub[i] != 0:
                return None
        else:
            if Ub[i] % d:
                return None
            y[i] = Ub[i] // d
    return tuple(dot(row, y) for row in snf.V)

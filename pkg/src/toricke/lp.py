"""Exact two-phase simplex over Q with Bland's anti-cycling rule.

Small dense problems only.  The canonical problem is::

    minimize    c . x
    subject to  A_ub x <= b_ub,  A_eq x == b_eq,  x >= 0

Use :func:`linprog` with ``free=True`` to drop the sign constraint (each
variable is then split into a difference of two nonnegative ones).
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple = None
    value: Fraction = None

    @property
    def feasible(self):
        return self.status != "infeasible"


def _pivot(T, basis, row, col):
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for i in range(len(T)):
        if i != row and T[i][col] != 0:
            f = T[i][col]
            T[i] = [a - f * b for a, b in zip(T[i], T[row])]
    basis[row] = col


def _run(T, basis, cost, allowed):
    """Minimize ``cost`` over the tableau T (last column = rhs) in place.

    Returns False if unbounded.
    """
    ncols = len(T[0]) - 1
    while True:
        # reduced costs: c_j - c_B B^-1 A_j
        cb = [cost[b] for b in basis]
        enter = None
        for j in range(ncols):
            if not allowed[j] or j in basis:
                continue
            rc = cost[j] - sum(cb[i] * T[i][j] for i in range(len(T)))
            if rc < 0:
                enter = j
                break
        if enter is None:
            return True
        leave = None
        best = None
        for i in range(len(T)):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return False
        _pivot(T, basis, leave, enter)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free=False):
    """Solve the LP exactly.  Returns an :class:`LPResult`."""
    n = len(c)
    c = [Fraction(x) for x in c]
    A_ub = [[Fraction(x) for x in row] for row in A_ub]
    A_eq = [[Fraction(x) for x in row] for row in A_eq]
    b_ub = [Fraction(x) for x in b_ub]
    b_eq = [Fraction(x) for x in b_eq]
    if free:
        res = linprog(c + [-x for x in c],
                      [row + [-x for x in row] for row in A_ub], b_ub,
                      [row + [-x for x in row] for row in A_eq], b_eq)
        if res.status != "optimal":
            return res
        x = tuple(p - q for p, q in zip(res.x[:n], res.x[n:]))
        return LPResult("optimal", x, res.value)

    n_slack = len(A_ub)
    rows = []
    for i, (row, b) in enumerate(zip(A_ub, b_ub)):
        slack = [Fraction(int(j == i)) for j in range(n_slack)]
        rows.append((row + slack, b))
    for row, b in zip(A_eq, b_eq):
        rows.append((row + [Fraction(0)] * n_slack, b))
    m = len(rows)
    nv = n + n_slack
    if m == 0:
        if any(x < 0 for x in c):
            return LPResult("unbounded")
        return LPResult("optimal", tuple(Fraction(0) for _ in range(n)), Fraction(0))

    T = []
    for i, (row, b) in enumerate(rows):
        if b < 0:
            row, b = [-x for x in row], -b
        art = [Fraction(int(j == i)) for j in range(m)]
        T.append(row + art + [b])
    basis = [nv + i for i in range(m)]
    total = nv + m

    phase1 = [Fraction(0)] * nv + [Fraction(1)] * m
    _run(T, basis, phase1, [True] * total)
    if sum(T[i][-1] for i in range(m) if basis[i] >= nv) != 0:
        return LPResult("infeasible")

    # drive remaining (zero-valued) artificials out of the basis
    keep = []
    for i in range(m):
        if basis[i] >= nv:
            col = next((j for j in range(nv) if T[i][j] != 0), None)
            if col is None:
                continue  # redundant constraint
            _pivot(T, basis, i, col)
        keep.append(i)
    T = [T[i] for i in keep]
    basis = [basis[i] for i in keep]

    cost = c + [Fraction(0)] * (n_slack + m)
    allowed = [True] * nv + [False] * m
    if not _run(T, basis, cost, allowed):
        return LPResult("unbounded")
    x = [Fraction(0)] * total
    for i, b in enumerate(basis):
        x[b] = T[i][-1]
    x = tuple(x[:n])
    return LPResult("optimal", x, sum((ci * xi for ci, xi in zip(c, x)), Fraction(0)))


def in_cone(v, generators):
    """True iff v is a nonnegative combination of the generators."""
    if not generators:
        return all(x == 0 for x in v)
    cols = list(generators)
    A = [[g[i] for g in cols] for i in range(len(v))]
    return linprog([0] * len(cols), A_eq=A, b_eq=list(v)).feasible

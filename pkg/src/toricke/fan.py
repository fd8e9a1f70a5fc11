"""Polyhedral fans in N = Z^n.

A :class:`Fan` stores primitive ray generators and its maximal cones as sets
of ray indices.  Ray order is significant: divisors and boundaries are
coefficient lists aligned with it.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .errors import DimensionMismatch
from .exactlin import dot, nullspace, rank
from .lp import in_cone, linprog
from .polytope import facets

__all__ = [
    "Fan",
    "FanReport",
    "check_fan_map",
    "cone_facets",
    "fans_equal",
    "normal_fan",
    "projective_space_fan",
    "validate",
]


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple
    max_cones: tuple

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        if any(len(r) != self.dim for r in rays):
            raise ValueError("ray of wrong dimension")
        cones = tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)

    def cone_rays(self, cone):
        return [self.rays[i] for i in cone]

    def to_json(self):
        return {"dim": self.dim, "rays": [list(r) for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["dim"]), tuple(data["rays"]), tuple(data["max_cones"]))


@dataclass(frozen=True)
class FanReport:
    is_valid: bool
    is_complete: bool
    is_simplicial: bool
    picard_rank_one: bool
    problems: tuple = field(default=())

    def to_json(self):
        return {"is_valid": self.is_valid, "is_complete": self.is_complete,
                "is_simplicial": self.is_simplicial,
                "picard_rank_one": self.picard_rank_one,
                "problems": list(self.problems)}


def projective_space_fan(n):
    """Fan of P^n: rays e_1..e_n, -(e_1+...+e_n); all n-subsets as cones."""
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple([-1] * n))
    return Fan(n, tuple(rays), tuple(combinations(range(n + 1), n)))


# --------------------------------------------------------------------------
# Cone-level helpers
# --------------------------------------------------------------------------

def _strongly_convex(gens):
    # no nontrivial nonnegative combination sums to zero
    k, n = len(gens), len(gens[0])
    A = [[g[i] for g in gens] for i in range(n)] + [[1] * k]
    return not linprog([0] * k, A_eq=A, b_eq=[0] * n + [1]).feasible


def _separated(fan, s, t):
    """Separation lemma: cones s and t meet in the common face spanned by
    their shared rays iff some m vanishes on shared rays, is >= 1 on the
    rest of s and <= -1 on the rest of t."""
    shared = set(s) & set(t)
    A_ub, b_ub, A_eq = [], [], []
    for i in s:
        r = fan.rays[i]
        if i in shared:
            A_eq.append(list(r))
        else:
            A_ub.append([-x for x in r])
            b_ub.append(-1)
    for i in t:
        if i not in shared:
            A_ub.append(list(fan.rays[i]))
            b_ub.append(-1)
    res = linprog([0] * fan.dim, A_ub=A_ub, b_ub=b_ub,
                  A_eq=A_eq, b_eq=[0] * len(A_eq), free=True)
    return res.feasible


def cone_facets(fan, cone):
    """Facets of a full-dimensional cone, as frozensets of ray indices."""
    n = fan.dim
    out = set()
    for sub in combinations(cone, n - 1):
        gens = [fan.rays[i] for i in sub]
        ker = nullspace(gens, ncols=n)
        if len(ker) != 1:
            continue
        normal = ker[0]
        vals = [dot(normal, fan.rays[i]) for i in cone]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            out.add(frozenset(i for i, v in zip(cone, vals) if v == 0))
    return out


# --------------------------------------------------------------------------
# Operations
# --------------------------------------------------------------------------

def validate(fan):
    """Structural checks.  Never raises; problems are listed in the report."""
    n = fan.dim
    problems = []
    rays = fan.rays
    for i, r in enumerate(rays):
        if not any(r):
            problems.append(f"ray {i} is zero")
        elif gcd(*r) != 1:
            problems.append(f"ray {i} is not primitive")
    if len(set(rays)) != len(rays):
        problems.append("rays are not pairwise distinct")
    if not fan.max_cones:
        problems.append("fan has no cones")
    for c in fan.max_cones:
        if not c or any(i < 0 or i >= len(rays) for i in c) or len(set(c)) != len(c):
            problems.append(f"cone {list(c)} has bad ray indices")
    if problems:
        return FanReport(False, False, False, False, tuple(problems))

    cones = fan.max_cones
    used = set()
    for c in cones:
        used.update(c)
        gens = fan.cone_rays(c)
        if not _strongly_convex(gens):
            problems.append(f"cone {list(c)} is not strongly convex")
            continue
        for i in c:
            others = [rays[j] for j in c if j != i]
            if in_cone(rays[i], others):
                problems.append(f"ray {i} is not extremal in cone {list(c)}")
    missing = set(range(len(rays))) - used
    if missing:
        problems.append(f"rays {sorted(missing)} lie in no maximal cone")
    for a, b in combinations(cones, 2):
        if set(a) <= set(b) or set(b) <= set(a):
            problems.append(f"cones {list(a)} and {list(b)} are nested")
        elif not _separated(fan, a, b):
            problems.append(f"cones {list(a)} and {list(b)} do not meet in a common face")
    valid = not problems

    full = all(rank(fan.cone_rays(c)) == n for c in cones)
    simplicial = all(len(c) == n for c in cones) and full
    complete = False
    if valid and full:
        counts = {}
        for c in cones:
            for f in cone_facets(fan, c):
                counts[f] = counts.get(f, 0) + 1
        complete = all(v == 2 for v in counts.values())
    rank_one = valid and complete and simplicial and len(rays) == n + 1
    return FanReport(valid, complete, simplicial and valid, rank_one, tuple(problems))


def normal_fan(P):
    """Inner normal fan of a full-dimensional V-polytope.

    Rays are the primitive facet normals (in canonical facet order); there
    is one maximal cone per vertex (in vertex order).
    """
    H = facets(P)
    rays = tuple(normal for normal, _ in H.ineqs)
    cones = []
    for v in P.vertices:
        cones.append(tuple(i for i, (a, b) in enumerate(H.ineqs) if dot(a, v) == b))
    return Fan(P.dim, rays, tuple(cones))


def fans_equal(A, B):
    if A.dim != B.dim:
        raise DimensionMismatch("fans live in different dimensions")
    if sorted(A.rays) != sorted(B.rays):
        return False

    def cone_set(F):
        return {frozenset(F.rays[i] for i in c) for c in F.max_cones}

    return cone_set(A) == cone_set(B)


def _apply(B, v):
    return tuple(dot(row, v) for row in B)


def check_fan_map(B, source, target):
    """Does x -> B x send every maximal source cone onto a maximal target cone?

    'Onto' means the image generators lie in the target cone and positively
    span it.
    """
    n = source.dim
    if target.dim != n or len(B) != n or any(len(row) != n for row in B):
        raise DimensionMismatch("lattice map and fans must share dimension n")
    for c in source.max_cones:
        images = [_apply(B, source.rays[i]) for i in c]
        if not any(_maps_onto(images, target.cone_rays(t)) for t in target.max_cones):
            return False
    return True


def _maps_onto(images, gens):
    return (all(in_cone(v, gens) for v in images)
            and all(in_cone(g, images) for g in gens))

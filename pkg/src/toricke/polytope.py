"""Exact rational convex polytopes.

Two representations are kept side by side: :class:`HPolytope` (inequalities
``<x, normal> >= rhs``) and :class:`VPolytope` (vertex list).  Conversion,
polar duality, volume and barycenter are all computed over Q.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import Degenerate, Empty, OriginNotInterior, Unbounded
from .exactlin import det, dot, format_rat, nullspace, parse_rat, primitive, rank, solve
from .lp import linprog

__all__ = [
    "HPolytope",
    "VPolytope",
    "affine_dim",
    "barycenter",
    "conv",
    "facets",
    "linear_image",
    "polar_dual",
    "scale",
    "translate",
    "vertices",
    "volume",
]


def _vec(v):
    return tuple(parse_rat(x) for x in v)


@dataclass(frozen=True)
class HPolytope:
    dim: int
    ineqs: tuple  # ((normal, rhs), ...) meaning <x, normal> >= rhs

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        clean = []
        for normal, rhs in self.ineqs:
            normal = _vec(normal)
            if len(normal) != self.dim:
                raise ValueError(f"normal {normal} has wrong length")
            if not any(normal):
                raise ValueError("zero normal vector")
            clean.append((normal, parse_rat(rhs)))
        object.__setattr__(self, "ineqs", tuple(clean))

    def contains(self, x):
        return all(dot(x, a) >= b for a, b in self.ineqs)

    def to_json(self):
        return {
            "dim": self.dim,
            "ineqs": [{"normal": [format_rat(a) for a in normal], "rhs": format_rat(rhs)}
                      for normal, rhs in self.ineqs],
        }

    @classmethod
    def from_json(cls, data):
        return cls(int(data["dim"]),
                   tuple((d["normal"], d["rhs"]) for d in data["ineqs"]))


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of ``vertices``.  Every listed point must be a vertex;
    use :func:`conv` to build one from an arbitrary point set."""

    dim: int
    vertices: tuple

    def __post_init__(self):
        vs = tuple(_vec(v) for v in self.vertices)
        if not vs:
            raise ValueError("a polytope needs at least one vertex")
        if any(len(v) != self.dim for v in vs):
            raise ValueError("vertex of wrong dimension")
        object.__setattr__(self, "vertices", tuple(sorted(set(vs))))

    def to_json(self):
        return {"dim": self.dim,
                "vertices": [[format_rat(x) for x in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["dim"]), tuple(data["vertices"]))


def affine_dim(points):
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    diffs = [tuple(a - b for a, b in zip(p, p0)) for p in points[1:]]
    return rank(diffs) if diffs else 0


# --------------------------------------------------------------------------
# Representation conversion
# --------------------------------------------------------------------------

def _is_nonempty(P):
    A = [[-x for x in a] for a, _ in P.ineqs]
    b = [-r for _, r in P.ineqs]
    return linprog([0] * P.dim, A_ub=A, b_ub=b, free=True).feasible


def _normals_positively_span(normals, n):
    """cone(normals) = Q^n  iff  they span and admit a strictly positive
    linear relation."""
    if rank(normals) < n:
        return False
    k = len(normals)
    A_eq = [[normals[j][i] for j in range(k)] for i in range(n)]
    # lambda_j >= 1 written as -lambda_j <= -1
    A_ub = [[-int(i == j) for j in range(k)] for i in range(k)]
    return linprog([0] * k, A_ub=A_ub, b_ub=[-1] * k, A_eq=A_eq, b_eq=[0] * n).feasible


def vertices(P):
    """Vertex enumeration by intersecting every n-subset of inequalities.

    Raises :class:`Unbounded` or :class:`Empty` when there is no bounded
    nonempty polytope to return.
    """
    n = P.dim
    normals = [a for a, _ in P.ineqs]
    if not _normals_positively_span(normals, n):
        if _is_nonempty(P):
            raise Unbounded("polyhedron has a recession direction")
        raise Empty("inequality system is infeasible")
    found = set()
    for subset in combinations(range(len(P.ineqs)), n):
        A = [P.ineqs[i][0] for i in subset]
        if det(A) == 0:
            continue
        x = solve(A, [P.ineqs[i][1] for i in subset])
        if x not in found and P.contains(x):
            found.add(x)
    if not found:
        raise Empty("inequality system is infeasible")
    return VPolytope(n, tuple(found))


def _supporting_hyperplanes(points, n):
    """Facets of conv(points) as {(primitive inner normal, rhs): tight index set}.

    ``points`` must affinely span Q^n.
    """
    out = {}
    for subset in combinations(range(len(points)), n):
        p0 = points[subset[0]]
        diffs = [tuple(a - b for a, b in zip(points[i], p0)) for i in subset[1:]]
        ker = nullspace(diffs, ncols=n)
        if len(ker) != 1:
            continue
        normal = primitive(ker[0])
        rhs = dot(normal, p0)
        vals = [dot(normal, p) - rhs for p in points]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            normal, rhs = tuple(-x for x in normal), -rhs
        else:
            continue
        if (normal, rhs) not in out:
            out[(normal, rhs)] = frozenset(i for i, p in enumerate(points)
                                           if dot(normal, p) == rhs)
    return out


def _check_full(points, n):
    if affine_dim(points) < n:
        raise Degenerate("polytope is not full-dimensional")


def facets(P):
    """Irredundant H-representation with primitive integer inner normals,
    sorted canonically."""
    pts = list(P.vertices)
    _check_full(pts, P.dim)
    hs = _supporting_hyperplanes(pts, P.dim)
    return HPolytope(P.dim, tuple(sorted(hs)))


def conv(points):
    """Convex hull of an arbitrary finite point set (drops non-vertices).

    Lower-dimensional point sets are accepted; only their extreme points
    are kept, found by LP.
    """
    pts = sorted(set(_vec(p) for p in points))
    if not pts:
        raise ValueError("empty point set")
    n = len(pts[0])
    if affine_dim(pts) == n:
        hs = _supporting_hyperplanes(pts, n)
        keep = set()
        # a point is a vertex iff its tight facets cut out exactly it
        for i, p in enumerate(pts):
            tight = [h for h, s in hs.items() if i in s]
            if len(tight) >= n and rank([h[0] for h in tight]) == n:
                keep.add(p)
        return VPolytope(n, tuple(keep))
    keep = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        if not others or not _in_hull(p, others):
            keep.append(p)
    return VPolytope(n, tuple(keep))


def _in_hull(p, pts):
    k = len(pts)
    A = [[q[i] for q in pts] for i in range(len(p))] + [[1] * k]
    return linprog([0] * k, A_eq=A, b_eq=list(p) + [1]).feasible


# --------------------------------------------------------------------------
# Duality and affine maps
# --------------------------------------------------------------------------

def polar_dual(P):
    """{v : <u, v> >= -1 for all u in P}.  Needs 0 strictly inside P."""
    try:
        H = facets(P)
    except Degenerate as exc:
        raise OriginNotInterior("polytope is not full-dimensional") from exc
    if any(rhs >= 0 for _, rhs in H.ineqs):
        raise OriginNotInterior("origin is not an interior point")
    dual = HPolytope(P.dim, tuple((u, -1) for u in P.vertices))
    return vertices(dual)


def translate(P, t):
    t = _vec(t)
    if isinstance(P, HPolytope):
        return HPolytope(P.dim, tuple((a, b + dot(a, t)) for a, b in P.ineqs))
    return VPolytope(P.dim, tuple(tuple(x + y for x, y in zip(v, t)) for v in P.vertices))


def scale(P, lam):
    lam = parse_rat(lam)
    if lam <= 0:
        raise ValueError("scale factor must be positive")
    if isinstance(P, HPolytope):
        return HPolytope(P.dim, tuple((a, b * lam) for a, b in P.ineqs))
    return VPolytope(P.dim, tuple(tuple(x * lam for x in v) for v in P.vertices))


def linear_image(P, A):
    """Image of a V-polytope under the invertible linear map x -> A x."""
    return VPolytope(P.dim, tuple(tuple(dot(row, v) for row in A) for v in P.vertices))


# --------------------------------------------------------------------------
# Triangulation, volume, barycenter
# --------------------------------------------------------------------------

def _triangulate(P, apex="min"):
    """Recursive apex (pulling) triangulation.  Yields vertex-index tuples."""
    pts = list(P.vertices)
    n = P.dim
    _check_full(pts, n)
    facet_sets = list(_supporting_hyperplanes(pts, n).values())
    pick = min if apex == "min" else max
    dims = {}

    def fdim(S):
        if S not in dims:
            dims[S] = affine_dim(pts[i] for i in S)
        return dims[S]

    def rec(S, k):
        if k == 0:
            return [(next(iter(S)),)]
        top = pick(S, key=lambda i: pts[i])
        faces = {S & F for F in facet_sets}
        out = []
        for f in sorted(faces, key=sorted):
            if top in f or fdim(f) != k - 1:
                continue
            out.extend(s + (top,) for s in rec(f, k - 1))
        return out

    return pts, rec(frozenset(range(len(pts))), n)


def _simplex_volume(vs):
    v0 = vs[0]
    M = [tuple(a - b for a, b in zip(v, v0)) for v in vs[1:]]
    return abs(det(M)) / factorial(len(v0))


def volume(P, apex="min"):
    pts, simplices = _triangulate(P, apex)
    return sum((_simplex_volume([pts[i] for i in s]) for s in simplices), Fraction(0))


def barycenter(P, apex="min"):
    """Volume-weighted centroid, exact.  ``apex`` ("min" or "max") selects
    the triangulation; the result does not depend on it."""
    pts, simplices = _triangulate(P, apex)
    n = P.dim
    total = Fraction(0)
    moment = [Fraction(0)] * n
    for s in simplices:
        vs = [pts[i] for i in s]
        w = _simplex_volume(vs)
        total += w
        for j in range(n):
            moment[j] += w * sum(v[j] for v in vs) / (n + 1)
    return tuple(m / total for m in moment)

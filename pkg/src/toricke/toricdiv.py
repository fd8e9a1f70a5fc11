"""Torus-invariant divisors on a fan.

A divisor is a list of rational coefficients a_rho aligned with the fan's
ray order.  Its polytope is ``{u : <u, u_rho> >= -a_rho}``.  A boundary with
standard coefficients is stored by its ramification indices m_rho, the
coefficient being 1 - 1/m_rho.

Notation: u_rho is always a primitive ray generator and v_rho a vertex of
the dual polytope, v_rho = u_rho / (1 - a_rho).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (DimensionMismatch, Empty, InternalVerificationFailed,
                     NoAmpleDivisor, NotComplete, NotSimplicial, OriginNotInterior,
                     Unbounded, Degenerate)
from .exactlin import dot, format_rat, parse_rat, solve
from .fan import fans_equal, normal_fan, validate
from .lp import linprog
from .polytope import HPolytope, VPolytope, affine_dim, conv, polar_dual, vertices

__all__ = [
    "StandardBoundary",
    "ToricDivisor",
    "canonical_divisor",
    "divisor_of_character",
    "dual_vertices",
    "find_ample",
    "is_ample",
    "polytope_of",
]


@dataclass(frozen=True)
class ToricDivisor:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(parse_rat(a) for a in self.coeffs))

    def __add__(self, other):
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionMismatch("divisors on different fans")
        return ToricDivisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return ToricDivisor(tuple(-a for a in self.coeffs))

    def __mul__(self, lam):
        lam = parse_rat(lam)
        return ToricDivisor(tuple(lam * a for a in self.coeffs))

    __rmul__ = __mul__

    def to_json(self):
        return {"coeffs": [format_rat(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["coeffs"]))


@dataclass(frozen=True)
class StandardBoundary:
    """Delta = sum (1 - 1/m_rho) D_rho.  m_rho = 1 means rho is not in Delta."""

    m: tuple

    def __post_init__(self):
        m = tuple(self.m)
        for x in m:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise ValueError(f"ramification index must be an integer >= 1, got {x!r}")
        object.__setattr__(self, "m", m)

    @classmethod
    def trivial(cls, nrays):
        return cls((1,) * nrays)

    @property
    def coefficients(self):
        return tuple(1 - Fraction(1, x) for x in self.m)

    def log_anticanonical(self):
        """-(K + Delta) = sum 1/m_rho D_rho."""
        return ToricDivisor(tuple(Fraction(1, x) for x in self.m))

    def to_json(self):
        return {"m": list(self.m)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(int(x) for x in data["m"]))


def _check_len(fan, n):
    if n != len(fan.rays):
        raise DimensionMismatch(f"expected {len(fan.rays)} coefficients, got {n}")


def canonical_divisor(fan):
    return ToricDivisor((-1,) * len(fan.rays))


def divisor_of_character(fan, m):
    """Principal divisor of the character m: coefficients -<m, u_rho>."""
    m = tuple(parse_rat(x) for x in m)
    if len(m) != fan.dim:
        raise DimensionMismatch("character has wrong dimension")
    return ToricDivisor(tuple(-dot(m, u) for u in fan.rays))


def polytope_of(fan, D):
    _check_len(fan, len(D.coeffs))
    return HPolytope(fan.dim, tuple((u, -a) for u, a in zip(fan.rays, D.coeffs)))


def dual_vertices(fan, boundary, check=False):
    """conv(m_rho u_rho) in N_Q, the dual of the log anticanonical polytope.

    With ``check=True`` the result is compared against the polar dual of
    ``polytope_of(fan, -(K + Delta))``.
    """
    _check_len(fan, len(boundary.m))
    Q = conv([tuple(m * x for x in u) for m, u in zip(boundary.m, fan.rays)])
    if check:
        P = vertices(polytope_of(fan, boundary.log_anticanonical()))
        if polar_dual(P) != Q:
            raise OriginNotInterior("conv(m_rho u_rho) is not the polar dual of P_-(K+Delta)")
    return Q


def is_ample(fan, D):
    """Normal-fan criterion: P_D is bounded, full-dimensional and its normal
    fan is the given fan."""
    try:
        P = vertices(polytope_of(fan, D))
    except (Unbounded, Empty):
        return False
    if affine_dim(P.vertices) < fan.dim:
        return False
    try:
        return fans_equal(normal_fan(P), fan)
    except Degenerate:
        return False


def _inverse(A):
    n = len(A)
    cols = [solve(A, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def find_ample(fan):
    """An ample Q-divisor with nonnegative coefficients, found by exact LP.

    For each maximal cone s the Cartier datum m_s solves <m_s, u_r> = -a_r
    on the rays of s; strict convexity asks <m_s, u_r> >= -a_r + 1 off s.
    Among feasible a >= 0 the simplex returns the one minimizing sum(a).
    """
    report = validate(fan)
    if not report.is_valid or not report.is_complete:
        raise NotComplete("fan is not complete; no divisor polytope is bounded")
    if not report.is_simplicial:
        raise NotSimplicial("find_ample needs a simplicial fan")
    k = len(fan.rays)
    A_ub, b_ub = [], []
    for cone in fan.max_cones:
        W = _inverse(fan.cone_rays(cone))
        for r in range(k):
            if r in cone:
                continue
            # <u_r, m_s> = -(u_r^T W) a_s; require u_r^T W a_s - a_r <= -1
            uw = [dot(fan.rays[r], [W[i][j] for i in range(fan.dim)]) for j in range(fan.dim)]
            row = [Fraction(0)] * k
            for j, idx in enumerate(cone):
                row[idx] += uw[j]
            row[r] -= 1
            A_ub.append(row)
            b_ub.append(-1)
    res = linprog([1] * k, A_ub=A_ub, b_ub=b_ub)
    if res.status != "optimal":
        raise NoAmpleDivisor("no strictly convex support function: fan is not projective")
    D = ToricDivisor(res.x)
    if not is_ample(fan, D):
        raise InternalVerificationFailed("LP solution failed the ampleness recheck")
    return D

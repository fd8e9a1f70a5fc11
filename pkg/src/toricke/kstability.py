"""K-polystability of toric pairs and the standard-coefficient boundary
construction.

A toric pair (X, Delta) with -(K + Delta) ample is K-polystable exactly when
the polytope of -(K + Delta) in M_Q has its barycenter at the origin.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (DimensionMismatch, Empty, InternalVerificationFailed, InvalidFan,
                     NotAmple, NotRankOne, Unbounded)
from .exactlin import dot, format_rat
from .fan import validate
from .polytope import affine_dim, barycenter, vertices
from .toricdiv import StandardBoundary, is_ample, polytope_of

__all__ = [
    "BoundaryConstruction",
    "KPSReport",
    "condition2_rank1",
    "construct_standard_boundary",
    "is_k_polystable",
]


@dataclass(frozen=True)
class KPSReport:
    is_log_fano: bool
    barycenter: tuple  # None when P_-(K+Delta) is unbounded or degenerate
    is_k_polystable: bool

    def to_json(self):
        bc = None if self.barycenter is None else [format_rat(x) for x in self.barycenter]
        return {"is_log_fano": self.is_log_fano, "barycenter": bc,
                "k_polystable": self.is_k_polystable}


@dataclass(frozen=True)
class BoundaryConstruction:
    u_b: tuple   # barycenter of P_L
    b: tuple     # coefficients of the centred divisor L'
    l: int       # lcm of the numerators of b
    boundary: StandardBoundary

    def to_json(self):
        return {"u_b": [format_rat(x) for x in self.u_b],
                "b": [format_rat(x) for x in self.b],
                "l": self.l, "m": list(self.boundary.m)}


def is_k_polystable(fan, boundary):
    report = validate(fan)
    if not report.is_valid:
        raise InvalidFan("; ".join(report.problems))
    D = boundary.log_anticanonical()
    fano = is_ample(fan, D)
    bc = None
    try:
        P = vertices(polytope_of(fan, D))
        if affine_dim(P.vertices) == fan.dim:
            bc = barycenter(P)
    except (Unbounded, Empty):
        pass
    polystable = fano and bc is not None and not any(bc)
    return KPSReport(fano, bc, polystable)


def construct_standard_boundary(fan, L):
    """Centre P_L at its barycenter and rescale so the facet offsets become
    1/m_rho with integral m_rho.

    Translating P_L by -u_b turns the coefficient a_rho into
    b_rho = a_rho + <u_b, u_rho>; all b_rho are positive because u_b is an
    interior point.  With l = lcm of the numerators of the b_rho, the
    polytope P_L' / l has offsets 1/m_rho where m_rho = l / b_rho.
    """
    if not is_ample(fan, L):
        raise NotAmple("the supplied divisor is not ample on this fan")
    u_b = barycenter(vertices(polytope_of(fan, L)))
    b = tuple(a + dot(u_b, u) for a, u in zip(L.coeffs, fan.rays))
    if any(x <= 0 for x in b):
        raise InternalVerificationFailed(f"non-positive centred coefficient in {b}")
    l = lcm(*(x.numerator for x in b))
    m = []
    for x in b:
        q = Fraction(l) / x
        if q.denominator != 1:
            raise InternalVerificationFailed(f"m = {q} is not integral")
        m.append(int(q))
    boundary = StandardBoundary(tuple(m))
    check = is_k_polystable(fan, boundary)
    if not check.is_k_polystable:
        raise InternalVerificationFailed(
            f"constructed boundary {m} is not K-polystable: barycenter {check.barycenter}")
    return BoundaryConstruction(u_b, b, l, boundary)


def condition2_rank1(fan, boundary):
    """Vertex sum of conv(m_rho u_rho) vanishes (rank-one fans only).

    For a simplex the barycenter is the vertex average, so this is the
    N-side barycenter test.
    """
    if not validate(fan).picard_rank_one:
        raise NotRankOne("fan is not complete simplicial with n+1 rays")
    if len(boundary.m) != len(fan.rays):
        raise DimensionMismatch("boundary does not match the fan's rays")
    total = [0] * fan.dim
    for m, u in zip(boundary.m, fan.rays):
        total = [t + m * x for t, x in zip(total, u)]
    return not any(total)

"""Log class groups, log Cox gradings, orbifold charts and the universal
orbifold cover of rank-one toric pairs.

Everything is driven by the scaled ray matrix with columns m_rho * u_rho:
the log class group is the cokernel of its transpose M -> Z^{rays}, the
orbifold fundamental group is N modulo its column lattice.
"""

from dataclasses import dataclass

from .errors import (DimensionMismatch, EquivalenceViolation, InternalVerificationFailed,
                     NotRankOne, NotSimplicialCone, RaysDoNotSpan)
from .exactlin import FinAbGroup, cokernel, det, format_rat, hermite, integer_solve, rank
from .fan import check_fan_map, projective_space_fan, validate
from .kstability import condition2_rank1, is_k_polystable

__all__ = [
    "CoverData",
    "LogClassGroup",
    "Rank1Report",
    "condition4",
    "local_chart",
    "log_class_group",
    "orbifold_fundamental_group",
    "rank1_report",
    "universal_cover",
]


@dataclass(frozen=True)
class LogClassGroup:
    group: FinAbGroup
    degrees: tuple  # per ray: (free part, torsion residues)

    def to_json(self):
        return {"cl": self.group.to_json(),
                "degrees": [{"free": list(f), "torsion": list(t)} for f, t in self.degrees]}


@dataclass(frozen=True)
class CoverData:
    cone: tuple
    B: tuple
    is_cover_of_projective_space: bool
    pi1_orb: FinAbGroup
    ramification: tuple  # ((ray index, m_rho), ...)

    def to_json(self):
        return {"cone": list(self.cone), "cover_matrix": [list(r) for r in self.B],
                "is_cover_of_projective_space": self.is_cover_of_projective_space,
                "pi1_orb": self.pi1_orb.to_json(),
                "ramification": [[i, m] for i, m in self.ramification]}


@dataclass(frozen=True)
class Rank1Report:
    conditions: dict  # c1..c4 -> bool
    barycenter: tuple
    class_group: LogClassGroup
    cover: CoverData

    def to_json(self):
        out = self.class_group.to_json()
        out.update({
            "conditions": dict(self.conditions),
            "barycenter": [format_rat(x) for x in self.barycenter],
            "pi1_orb": self.cover.pi1_orb.to_json(),
            "cover_matrix": [list(r) for r in self.cover.B],
            "cover_cone": list(self.cover.cone),
        })
        return out


def _scaled_rays(fan, boundary):
    if len(boundary.m) != len(fan.rays):
        raise DimensionMismatch("boundary does not match the fan's rays")
    return [tuple(m * x for x in u) for m, u in zip(boundary.m, fan.rays)]


def _require_rank_one(fan):
    if not validate(fan).picard_rank_one:
        raise NotRankOne("fan is not complete simplicial with n+1 rays")


def log_class_group(fan, boundary):
    """Cl(X, Delta) = coker(M -> Z^rays, u -> (<u, m_rho u_rho>)_rho)."""
    scaled = _scaled_rays(fan, boundary)
    if rank(scaled) < fan.dim:
        raise RaysDoNotSpan("ray generators do not span N_Q")
    relations = [[v[i] for v in scaled] for i in range(fan.dim)]
    group, images = cokernel(relations)
    r = group.rank
    return LogClassGroup(group, tuple((img[:r], img[r:]) for img in images))


def condition4(fan, boundary):
    """A homomorphism Cl(X, Delta) -> Z sends every variable degree to 1.

    Dually: a one-parameter subgroup of the grading quasitorus acting with
    all weights equal to 1.
    """
    _require_rank_one(fan)
    cl = log_class_group(fan, boundary)
    free = [list(f) for f, _ in cl.degrees]
    if cl.group.rank == 0:
        return False
    return integer_solve(free, [1] * len(free)) is not None


def orbifold_fundamental_group(fan, boundary):
    """N / <m_rho u_rho>, via Hermite basis then Smith invariants."""
    scaled = _scaled_rays(fan, boundary)
    if rank(scaled) < fan.dim:
        raise RaysDoNotSpan("ray generators do not span N_Q")
    H = hermite(scaled)
    group, _ = cokernel(H)
    if group.rank or abs(det(H)) != group.torsion_order:
        raise InternalVerificationFailed("Hermite and Smith disagree on the lattice index")
    return group


def _default_cone(fan):
    # the cone whose generators, sorted decreasingly, are lexicographically
    # largest; picks the standard-basis cone whenever it is present
    return max(fan.max_cones,
               key=lambda c: sorted((fan.rays[i] for i in c), reverse=True))


def universal_cover(fan, boundary, cone=None):
    """Candidate cover P^n -> X from the scaled generators of one cone.

    The cover exists iff the lattice map sends the fan of P^n onto the fan
    of X and the remaining generator -(e_1 + ... + e_n) lands exactly on
    m_rho u_rho of the omitted ray (ramification order m_rho there).
    """
    _require_rank_one(fan)
    scaled = _scaled_rays(fan, boundary)
    n = fan.dim
    if cone is None:
        cone = _default_cone(fan)
    cone = tuple(cone)
    if tuple(sorted(cone)) not in fan.max_cones:
        raise NotSimplicialCone(f"{list(cone)} is not a maximal cone")
    order = sorted(cone, key=lambda i: fan.rays[i], reverse=True)
    B = tuple(tuple(scaled[i][r] for i in order) for r in range(n))
    omitted = next(i for i in range(len(fan.rays)) if i not in cone)
    last = tuple(-sum(scaled[i][r] for i in order) for r in range(n))
    maps_fans = check_fan_map(B, projective_space_fan(n), fan)
    is_cover = maps_fans and last == scaled[omitted]
    ramification = tuple((i, boundary.m[i]) for i in range(len(fan.rays)))
    return CoverData(tuple(order), B, is_cover,
                     orbifold_fundamental_group(fan, boundary), ramification)


def local_chart(fan, boundary, cone):
    """Orbifold chart of a simplicial cone: Z^n -> N, e_i -> m_i u_i.

    Returns the finite chart group N / <m_i u_i> and the orders m_i.
    """
    cone = tuple(sorted(cone))
    n = fan.dim
    scaled = _scaled_rays(fan, boundary)
    if (len(cone) != n or len(set(cone)) != n
            or any(i < 0 or i >= len(fan.rays) for i in cone)):
        raise NotSimplicialCone(f"{list(cone)} does not have exactly n rays")
    if not any(set(cone) <= set(c) for c in fan.max_cones):
        raise NotSimplicialCone(f"{list(cone)} is not a cone of the fan")
    gens = [scaled[i] for i in cone]
    if rank(gens) != n:
        raise NotSimplicialCone(f"{list(cone)} is not full-dimensional")
    group, _ = cokernel(gens)
    return group, tuple((i, boundary.m[i]) for i in cone)


def rank1_report(fan, boundary):
    """Evaluate all rank-one characterizations and insist that they agree.

    c1: barycenter of P_-(K+Delta) in M_Q is 0; c2: sum m_rho u_rho = 0;
    c3: the orbifold universal cover is P^n; c4: weights-one subgroup.
    """
    _require_rank_one(fan)
    kps = is_k_polystable(fan, boundary)
    cover = universal_cover(fan, boundary)
    cl = log_class_group(fan, boundary)
    conditions = {
        "c1": kps.is_k_polystable,
        "c2": condition2_rank1(fan, boundary),
        "c3": cover.is_cover_of_projective_space,
        "c4": condition4(fan, boundary),
    }
    if len(set(conditions.values())) != 1:
        raise EquivalenceViolation(f"rank-one conditions disagree: {conditions}")
    return Rank1Report(conditions, kps.barycenter, cl, cover)

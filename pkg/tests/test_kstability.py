from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from toricke.errors import DimensionMismatch, InvalidFan, NotAmple, NotRankOne
from toricke.fan import Fan, validate
from toricke.exactlin import primitive
from toricke.kstability import condition2_rank1, construct_standard_boundary, is_k_polystable
from toricke.polytope import barycenter, vertices
from toricke.toricdiv import (StandardBoundary, ToricDivisor, canonical_divisor,
                              divisor_of_character, find_ample, is_ample, polytope_of)

from oracles import clip_polygon, random_rank_one, seeded, shoelace


def test_is_k_polystable_p2(p2):
    r = is_k_polystable(p2, StandardBoundary((1, 1, 1)))
    assert r.is_log_fano and r.is_k_polystable
    assert r.barycenter == (0, 0)
    # the simplex barycenter is its vertex average
    pts = [(-1, -1), (2, -1), (-1, 2)]
    assert r.barycenter == tuple(sum(p[i] for p in pts) / 3 for i in range(2))


def test_is_k_polystable_f1(f1):
    r = is_k_polystable(f1, StandardBoundary.trivial(4))
    assert r.is_log_fano and not r.is_k_polystable
    assert r.barycenter == (F(1, 12), F(1, 6))
    P = polytope_of(f1, -canonical_divisor(f1))
    _, cen = shoelace(clip_polygon(P.ineqs))
    assert cen == r.barycenter


def test_is_k_polystable_p112(p112):
    assert is_k_polystable(p112, StandardBoundary((1, 1, 2))).is_k_polystable
    r = is_k_polystable(p112, StandardBoundary((1, 1, 1)))
    assert r.is_log_fano and not r.is_k_polystable


def test_is_k_polystable_not_fano(f2):
    r = is_k_polystable(f2, StandardBoundary.trivial(4))
    assert not r.is_log_fano and not r.is_k_polystable
    assert r.to_json()["k_polystable"] is False


def test_is_k_polystable_invalid_fan():
    with pytest.raises(InvalidFan):
        is_k_polystable(Fan(2, ((2, 0), (0, 1)), ((0, 1),)), StandardBoundary((1, 1)))


def test_report_invariant_on_corpus(fans):
    for fan in fans.values():
        r = is_k_polystable(fan, StandardBoundary.trivial(len(fan.rays)))
        if r.is_k_polystable:
            assert r.is_log_fano and not any(r.barycenter)


# ---------------------------------------------------------------- standard boundary

def test_construct_p2(p2):
    c = construct_standard_boundary(p2, -canonical_divisor(p2))
    assert c.u_b == (0, 0)
    assert c.b == (1, 1, 1)
    assert c.l == 1
    assert c.boundary.m == (1, 1, 1)


def test_construct_p1_football(p1):
    c = construct_standard_boundary(p1, ToricDivisor((1, 2)))
    assert c.u_b == (F(1, 2),)
    assert c.b == (F(3, 2), F(3, 2))
    assert c.l == 3
    assert c.boundary.m == (2, 2)
    assert c.boundary.coefficients == (F(1, 2), F(1, 2))


def test_construct_f1(f1):
    assert f1.rays == ((1, 0), (0, 1), (-1, 1), (0, -1))
    c = construct_standard_boundary(f1, -canonical_divisor(f1))
    assert c.u_b == (F(1, 12), F(1, 6))
    assert c.b == (F(13, 12), F(7, 6), F(13, 12), F(5, 6))
    assert c.l == 455
    assert c.boundary.m == (420, 390, 420, 546)
    assert c.to_json()["m"] == [420, 390, 420, 546]


def test_construct_f1_against_clipping_oracle(f1):
    c = construct_standard_boundary(f1, -canonical_divisor(f1))
    D = c.boundary.log_anticanonical()
    ineqs = [(u, -a) for u, a in zip(f1.rays, D.coeffs)]
    poly = clip_polygon(ineqs)
    area, cen = shoelace(poly)
    assert area > 0 and cen == (0, 0)
    # P_{-(K+Delta)} is the translate of P_{-K} by -u_b, shrunk by 1/l
    P = vertices(polytope_of(f1, -canonical_divisor(f1)))
    expected = {tuple((x - u) / c.l for x, u in zip(v, c.u_b)) for v in P.vertices}
    assert set(poly) == expected


def test_construct_not_ample(f2):
    with pytest.raises(NotAmple):
        construct_standard_boundary(f2, -canonical_divisor(f2))


def _check_postconditions(fan, L):
    c = construct_standard_boundary(fan, L)
    assert all(x > 0 for x in c.b)
    assert all(isinstance(m, int) and m >= 1 for m in c.boundary.m)
    assert all(0 <= a < 1 for a in c.boundary.coefficients)
    D = c.boundary.log_anticanonical()
    assert is_ample(fan, D)
    assert barycenter(vertices(polytope_of(fan, D))) == (0,) * fan.dim
    return c


def test_construct_whole_corpus(fans):
    for name, fan in fans.items():
        if not validate(fan).is_simplicial:
            continue
        _check_postconditions(fan, find_ample(fan))


def _random_ample(rng, fan):
    A = find_ample(fan)
    m = tuple(F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(fan.dim))
    L = F(rng.randint(1, 5), rng.randint(1, 3)) * A + divisor_of_character(fan, m)
    K = -canonical_divisor(fan)
    if is_ample(fan, K):
        L = L + F(rng.randint(0, 3), rng.randint(1, 2)) * K
    return L


@pytest.mark.parametrize("seed", range(6))
def test_construct_random_ample(fans, seed):
    rng = seeded(seed)
    simplicial = sorted(n for n, f in fans.items() if validate(f).is_simplicial)
    for name in rng.sample(simplicial, 4):
        fan = fans[name]
        L = _random_ample(rng, fan)
        assert is_ample(fan, L)
        _check_postconditions(fan, L)


def test_scaling_changes_l_but_not_direction(p1, f1):
    # with l the lcm of numerators, 2L on P^1 gives b = (3, 3) and m = (1, 1),
    # while L itself gives m = (2, 2): the m-vector is only fixed up to scale
    assert construct_standard_boundary(p1, ToricDivisor((2, 4))).boundary.m == (1, 1)
    assert construct_standard_boundary(p1, ToricDivisor((1, 2))).boundary.m == (2, 2)
    base = construct_standard_boundary(f1, -canonical_divisor(f1)).boundary.m
    for lam in (F(1, 2), 2, F(7, 3), 13):
        m = construct_standard_boundary(f1, lam * -canonical_divisor(f1)).boundary.m
        assert primitive(m) == primitive(base)


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=F(1, 10), max_value=10, max_denominator=12),
       st.integers(0, 4))
def test_scaling_direction_invariance(lam, which):
    from toricke import corpus

    name = ["p2", "f1", "p1xp1", "dp7", "p112"][which]
    fan = corpus.load_fan(name)
    L = find_ample(fan)
    m0 = construct_standard_boundary(fan, L).boundary.m
    c = _check_postconditions(fan, lam * L)
    assert primitive(c.boundary.m) == primitive(m0)


@pytest.mark.parametrize("m", [(F(1, 2), F(1, 3)), (-2, 5), (0, F(-7, 4))])
def test_principal_shift_invariance(f1, m):
    L = -canonical_divisor(f1)
    base = construct_standard_boundary(f1, L)
    shifted = construct_standard_boundary(f1, L + divisor_of_character(f1, m))
    assert shifted.boundary == base.boundary
    assert shifted.b == base.b and shifted.l == base.l
    assert shifted.u_b == tuple(x + y for x, y in zip(base.u_b, m))


# ---------------------------------------------------------------- rank one

def test_condition2_examples(p2, p112, p123):
    assert condition2_rank1(p2, StandardBoundary((1, 1, 1)))
    assert not condition2_rank1(p112, StandardBoundary((1, 1, 1)))
    assert condition2_rank1(p123, StandardBoundary((1, 2, 3)))


def test_condition2_errors(f1, p2):
    with pytest.raises(NotRankOne):
        condition2_rank1(f1, StandardBoundary.trivial(4))
    with pytest.raises(DimensionMismatch):
        condition2_rank1(p2, StandardBoundary((1, 1)))


def test_m_side_agrees_with_n_side_corpus(fans):
    boundaries = {"p112": [(1, 1, 1), (1, 1, 2)], "p123": [(1, 1, 1), (1, 2, 3)],
                  "p235": [(1, 1, 1), (2, 3, 5)], "p1113": [(1, 1, 1, 1), (1, 1, 1, 3)]}
    for name, fan in fans.items():
        if not validate(fan).picard_rank_one:
            continue
        for m in boundaries.get(name, [(1,) * len(fan.rays)]):
            bd = StandardBoundary(m)
            assert is_k_polystable(fan, bd).is_k_polystable == condition2_rank1(fan, bd)


@pytest.mark.parametrize("seed", range(30))
def test_m_side_agrees_with_n_side_random(seed):
    rng = seeded(1000 + seed)
    fan, m = random_rank_one(rng, rng.choice([1, 2, 3]))
    bd = StandardBoundary(m)
    r = is_k_polystable(fan, bd)
    assert r.is_log_fano
    assert r.is_k_polystable == condition2_rank1(fan, bd)

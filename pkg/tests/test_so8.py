"""Exact checks for the 64-element family, the 28 generators, and the
31-dimensional invariance algebra."""

from fractions import Fraction

import pytest

from diracsym.exact import (
    HALF,
    I_UNIT,
    Matrix4,
    RealLinearOp,
    RealSpan,
    ZERO,
    commutator,
    compose,
    is_anti_hermitian,
    real_span_dim,
    sc,
)
from diracsym.gammas import build_gamma_set
from diracsym.so8 import (
    build_algebra31,
    build_clifford64,
    build_so8,
    clifford64_closure_report,
    verify_algebra31,
    verify_so8,
    verify_su2_pair,
)

g = build_gamma_set()
s = build_so8(g)


def test_s12_explicit_matrix():
    # s12 = (1/2) g1 g2 = -(i/2) diag(s3, s3), by direct multiplication
    mih = sc(0, 0, Fraction(-1, 2))
    ih = sc(0, 0, Fraction(1, 2))
    want = RealLinearOp.from_linear(Matrix4.diag(mih, ih, mih, ih))
    assert s(1, 2) == want
    assert s(1, 2) == compose(g[1], g[2]).scale(HALF)


def test_s56_is_i_half():
    assert s(5, 6) == RealLinearOp.identity().scale(sc(0, 0, Fraction(1, 2)))


def test_s_a8_is_half_gamma():
    for a in range(1, 8):
        assert s(a, 8) == g[a].scale(HALF)
        assert s(8, a) == -g[a].scale(HALF)


def test_antisymmetry_and_diagonal():
    assert s(3, 7) == -s(7, 3)
    assert s(4, 4).is_zero


def test_boost_pair_closes_into_rotation():
    assert commutator(s(1, 8), s(2, 8)) == s(1, 2)


def test_disjoint_indices_commute():
    assert commutator(s(1, 2), s(3, 4)).is_zero


def test_su2_example_relations():
    assert commutator(s(2, 3), s(3, 1)) == s(1, 2)
    assert commutator(s(2, 3), s(4, 5)).is_zero


def test_verify_so8_all_pairs():
    rep = verify_so8(s)
    assert rep.status == "verified-exact"
    assert rep.element_count == 28
    # 378 bracket relations + 28 anti-Hermiticity checks
    assert rep.relations_checked == 406
    assert rep.real_dimension == 28


def test_all_generators_anti_hermitian():
    for (a, b) in s.labels():
        assert is_anti_hermitian(s(a, b))


def test_verify_su2_pair():
    rep = verify_su2_pair(s)
    assert rep.status == "verified-exact"


# -- 64-element family -------------------------------------------------------

c64 = build_clifford64(g)


def test_clifford64_count_and_span():
    assert len(c64) == 64
    assert real_span_dim(c64) == 64


def test_stand_cd_contains_identity_and_g4():
    assert c64[0] == RealLinearOp.identity()
    assert c64[15] == g[4]  # full ordered product g0 g1 g2 g3


def test_clifford64_closure():
    rep = clifford64_closure_report(c64)
    assert rep.status == "verified-exact"
    assert rep.relations_checked == 64 * 64


def test_clifford64_contains_so8_products():
    # every generator is a unit multiple of a family element
    from diracsym.so8 import _unit_orbit
    table = set()
    for e in c64:
        table.update(_unit_orbit(e.key()))
    for (a, b) in s.labels():
        doubled = s(a, b) + s(a, b)  # clear the 1/2 normalization
        assert doubled.key() in table


# -- 31-dimensional algebra --------------------------------------------------

a31 = build_algebra31(g)


def test_algebra31_element_count():
    assert len(a31) == 31
    names = [n for n, _ in a31]
    assert names.count("ig0") == 1
    assert len([n for n in names if n.startswith("s")]) == 15


def test_algebra31_span_and_closure():
    rep = verify_algebra31(a31)
    assert rep.status == "verified-exact"
    assert rep.real_dimension == 31
    assert rep.relations_checked == 31 * 30 // 2


def test_ig0_s56_is_minus_half_g0():
    ops = dict(a31)
    want = g.gamma0.scale(sc(Fraction(-1, 2)))
    assert ops["ig0*s56"] == want


def test_so6_subset_closed():
    so6 = [op for name, op in a31[:15]]
    span = RealSpan(so6)
    assert span.dim == 15
    for a in so6:
        for b in so6:
            assert span.contains(commutator(a, b))

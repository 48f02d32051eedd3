"""Ring and operator-algebra properties of the exact layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diracsym.exact import (
    ExactScalar,
    I_UNIT,
    Matrix4,
    ONE,
    RealLinearOp,
    RealSpan,
    ZERO,
    adjoint,
    anticommutator,
    commutator,
    compose,
    is_anti_hermitian,
    is_hermitian,
    real_span_dim,
    sc,
)
from diracsym.gammas import build_gamma_set

_POOL = tuple(
    sc(ra, rb, ia, ib)
    for ra, rb, ia, ib in [
        (0, 0, 0, 0), (1, 0, 0, 0), (-1, 0, 0, 0), (0, 0, 1, 0),
        (0, 0, -1, 0), (Fraction(1, 2), 0, 0, 0), (0, 1, 0, 0),
        (0, Fraction(-1, 2), 0, 0), (0, 0, 0, 1), (2, 0, Fraction(-1, 3), 0),
        (Fraction(-2, 3), 1, 0, Fraction(1, 2)), (0, 0, Fraction(3, 2), -1),
    ]
)

scalars = st.sampled_from(_POOL)
fractions = st.sampled_from(
    tuple(Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)))


@st.composite
def matrices(draw):
    # sparse random matrices keep the exact arithmetic cheap
    rows = [[ZERO] * 4 for _ in range(4)]
    for _ in range(draw(st.integers(min_value=1, max_value=5))):
        i = draw(st.integers(min_value=0, max_value=3))
        j = draw(st.integers(min_value=0, max_value=3))
        rows[i][j] = draw(scalars)
    return Matrix4(rows)


@st.composite
def operators(draw):
    which = draw(st.integers(min_value=0, max_value=2))
    if which == 0:
        return RealLinearOp(L=draw(matrices()))
    if which == 1:
        return RealLinearOp(A=draw(matrices()))
    return RealLinearOp(L=draw(matrices()), A=draw(matrices()))


# -- scalar field ------------------------------------------------------------

def test_one_plus_i_times_one_minus_i():
    one_plus = sc(1, 0, 1)
    one_minus = sc(1, 0, -1)
    assert one_plus * one_minus == sc(2)


def test_sqrt2_squares_to_two():
    root2 = sc(0, 1)
    assert root2 * root2 == sc(2)


def test_conj_leaves_sqrt2_real():
    x = sc(1, 2, 3, 4)
    assert x.conj() == sc(1, 2, -3, -4)


@given(scalars, scalars, scalars)
def test_scalar_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert (x * y).conj() == x.conj() * y.conj()


def test_float_embedding():
    x = sc(1, 1, 0, Fraction(1, 2))
    val = complex(x)
    assert abs(val.real - (1 + 2 ** 0.5)) < 1e-15
    assert abs(val.imag - 2 ** 0.5 / 2) < 1e-15


# -- operator algebra --------------------------------------------------------

def test_conjugation_squares_to_identity():
    c = RealLinearOp.conjugation()
    assert compose(c, c) == RealLinearOp.identity()


def test_i_and_conjugation_anticommute():
    c = RealLinearOp.conjugation()
    i_op = RealLinearOp.identity().scale(I_UNIT)
    ic = compose(i_op, c)
    ci = compose(c, i_op)
    assert ic == c.scale(I_UNIT)
    assert ci == c.scale(sc(0, 0, -1))
    assert anticommutator(i_op, c).is_zero


def test_g5_g6_product_is_i():
    g = build_gamma_set()
    assert compose(g[5], g[6]) == RealLinearOp.identity().scale(I_UNIT)


def test_left_right_scalar_multiplication():
    g = build_gamma_set()
    i_op = RealLinearOp.identity().scale(I_UNIT)
    q = g[5]  # purely antilinear
    left = compose(i_op, q)
    right = compose(q, i_op)
    assert left == q.scale(I_UNIT)
    assert right == q.scale(sc(0, 0, -1))
    assert right == q.scale_right(I_UNIT)


@settings(max_examples=40)
@given(operators(), operators(), operators())
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=40)
@given(operators(), operators(), operators())
def test_jacobi_identity(a, b, c):
    total = (commutator(a, commutator(b, c))
             + commutator(b, commutator(c, a))
             + commutator(c, commutator(a, b)))
    assert total.is_zero


@settings(max_examples=40)
@given(operators(), operators())
def test_adjoint_antihomomorphism(a, b):
    assert adjoint(compose(a, b)) == compose(adjoint(b), adjoint(a))


@given(operators())
def test_adjoint_involution(a):
    assert adjoint(adjoint(a)) == a


def test_adjoint_examples():
    g = build_gamma_set()
    assert is_anti_hermitian(g[7])          # (i g0)^dag = -i g0
    assert adjoint(adjoint(g[5])) == g[5]
    assert not is_anti_hermitian(g.gamma0)  # g0 is Hermitian
    assert is_hermitian(g.gamma0)
    assert is_hermitian(RealLinearOp.conjugation())


def test_commutator_of_element_with_itself():
    g = build_gamma_set()
    assert commutator(g[1], g[1]).is_zero


# -- rank over Q(sqrt2) ------------------------------------------------------

def test_span_identity_and_i():
    ident = RealLinearOp.identity()
    assert real_span_dim([ident, ident.scale(I_UNIT)]) == 2


def test_span_rescaling_collapses():
    g = build_gamma_set()
    assert real_span_dim([g[1], g[1].scale(sc(3))]) == 1


def test_span_sqrt2_multiple_collapses():
    g = build_gamma_set()
    assert real_span_dim([g[1], g[1].scale(sc(0, 1))]) == 1


def test_span_empty_rejected():
    with pytest.raises(ValueError):
        real_span_dim([])


@settings(max_examples=25)
@given(st.lists(operators(), min_size=1, max_size=4),
       st.lists(fractions, min_size=16, max_size=16))
def test_span_invariant_under_recombination(ops, coeffs):
    base = real_span_dim(ops)
    mixed = list(ops)
    # add a random combination of the originals; the span cannot grow
    extra = RealLinearOp.zero()
    for op, c in zip(ops, coeffs):
        extra = extra + op.scale(sc(c))
    mixed.append(extra)
    assert real_span_dim(mixed) == base


def test_realspan_contains():
    g = build_gamma_set()
    span = RealSpan([g[1], g[2]])
    assert span.contains(g[1].scale(sc("7/3")) + g[2].scale(sc(0, 2)))
    assert not span.contains(g[3])

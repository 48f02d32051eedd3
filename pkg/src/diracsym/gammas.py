"""Dirac matrices in the standard Dirac-Pauli representation, plus the
extended family of seven anticommuting generators.

The first four generators are the usual gamma matrices (gamma^4 is the
product gamma^0 gamma^1 gamma^2 gamma^3, taken anti-Hermitian); generators
five and six are antilinear, built from gamma^1 gamma^3 and the conjugation
operator C; the seventh is i*gamma^0.  All seven square to -1 and pairwise
anticommute, generating a 64-dimensional real algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import (
    HALF,
    I_UNIT,
    Matrix4,
    ONE,
    RealLinearOp,
    ZERO,
    compose,
    sc,
)

__all__ = [
    "GammaSet",
    "build_gamma_set",
    "pauli_matrices",
    "dirac_gamma0",
    "dirac_gamma",
]

_M1 = -ONE
_I = I_UNIT
_MI = -I_UNIT


def pauli_matrices() -> tuple[Matrix4, ...]:
    """sigma^1..sigma^3 embedded as the upper-left 2x2 block (for tests)."""
    def emb(rows):
        full = [[ZERO] * 4 for _ in range(4)]
        for i in range(2):
            for j in range(2):
                full[i][j] = rows[i][j]
        return Matrix4(full)
    s1 = emb([[ZERO, ONE], [ONE, ZERO]])
    s2 = emb([[ZERO, _MI], [_I, ZERO]])
    s3 = emb([[ONE, ZERO], [ZERO, _M1]])
    return s1, s2, s3


def dirac_gamma0() -> Matrix4:
    return Matrix4.diag(ONE, ONE, _M1, _M1)


def dirac_gamma(ell: int) -> Matrix4:
    """gamma^ell, ell in 1..3: off-diagonal blocks [[0, sigma], [-sigma, 0]]."""
    sig = {
        1: [[ZERO, ONE], [ONE, ZERO]],
        2: [[ZERO, _MI], [_I, ZERO]],
        3: [[ONE, ZERO], [ZERO, _M1]],
    }[ell]
    rows = [[ZERO] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            rows[i][2 + j] = sig[i][j]
            rows[2 + i][j] = -sig[i][j]
    return Matrix4(rows)


@dataclass(frozen=True)
class GammaSet:
    """The seven generators, indexed 1..7, plus gamma^0 for convenience.

    gamma[1..4] are purely linear, gamma[5..6] purely antilinear,
    gamma[7] = i*gamma^0.
    """

    gamma0: RealLinearOp
    gamma: tuple[RealLinearOp, ...]  # length 8; index 0 unused

    def __getitem__(self, idx: int) -> RealLinearOp:
        if not 1 <= idx <= 7:
            raise IndexError("generator index must be in 1..7")
        return self.gamma[idx]

    @property
    def seven(self) -> tuple[RealLinearOp, ...]:
        return self.gamma[1:8]


def build_gamma_set() -> GammaSet:
    g0m = dirac_gamma0()
    g1m = dirac_gamma(1)
    g2m = dirac_gamma(2)
    g3m = dirac_gamma(3)
    g4m = g0m @ g1m @ g2m @ g3m

    g0 = RealLinearOp.from_linear(g0m)
    g1 = RealLinearOp.from_linear(g1m)
    g2 = RealLinearOp.from_linear(g2m)
    g3 = RealLinearOp.from_linear(g3m)
    g4 = RealLinearOp.from_linear(g4m)

    g13 = g1m @ g3m
    g5 = RealLinearOp.from_antilinear(g13)
    g6 = RealLinearOp.from_antilinear(g13.scale(I_UNIT))
    g7 = RealLinearOp.from_linear(g0m.scale(I_UNIT))

    return GammaSet(gamma0=g0,
                    gamma=(RealLinearOp.zero(), g1, g2, g3, g4, g5, g6, g7))

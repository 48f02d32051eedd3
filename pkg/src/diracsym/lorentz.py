"""Fermionic and bosonic boost-rotation generator sets on 4-spinors.

Four six-generator families are built exactly: two spinor realizations
(one purely matrix-valued, one involving the conjugation operator C) and
their sum/difference combinations, which carry the tensor-scalar and
vector content.  All are checked against the metric-weighted commutation
relations

    [s^{mu nu}, s^{rho sigma}] = -g^{mu rho} s^{nu sigma}
                                 - g^{rho nu} s^{sigma mu}
                                 - g^{nu sigma} s^{mu rho}
                                 - g^{sigma mu} s^{rho nu}

with g = diag(1, -1, -1, -1).  A transition operator W (containing 1/sqrt2
and conjugation entries) maps the spatial rotation block of the sum set to
an explicitly spin-1 form whose Casimir block is -2*diag(1, 1, 1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .exact import (
    ExactScalar,
    HALF,
    I_UNIT,
    Matrix4,
    ONE,
    RealLinearOp,
    ZERO,
    adjoint,
    commutator,
    compose,
    sc,
)
from .gammas import GammaSet, build_gamma_set
from .so8 import AlgebraClosureReport

__all__ = [
    "LorentzSet",
    "TransitionW",
    "build_lorentz",
    "build_transition_w",
    "verify_so13",
    "cross_commutators",
    "conjugate_spin_block",
    "expected_spin_block",
    "verify_spin_block",
    "casimir_so13",
    "hermiticity_table",
    "METRIC",
]

METRIC = (1, -1, -1, -1)

_LABELS = ("I", "II", "TS", "V")

_PAIRS = tuple((mu, nu) for mu in range(4) for nu in range(mu + 1, 4))


class LorentzSet:
    """Antisymmetric generator table s(mu, nu), mu, nu = 0..3."""

    def __init__(self, label: str, table: dict[tuple[int, int], RealLinearOp]):
        self.label = label
        self._table = table

    def __call__(self, mu: int, nu: int) -> RealLinearOp:
        if mu == nu:
            return RealLinearOp.zero()
        if mu < nu:
            return self._table[(mu, nu)]
        return -self._table[(nu, mu)]

    def named(self) -> list[tuple[str, RealLinearOp]]:
        return [(f"s{self.label}_{mu}{nu}", self._table[(mu, nu)])
                for (mu, nu) in _PAIRS]


def build_lorentz(label: str, g: GammaSet | None = None) -> LorentzSet:
    """Construct one of the four generator sets by label (I, II, TS, V)."""
    if label not in _LABELS:
        raise ValueError(f"unknown Lorentz set label {label!r}")
    if g is None:
        g = build_gamma_set()

    half_i = sc(0, 0, Fraction(1, 2))
    quarter = sc(Fraction(1, 4))

    table_i: dict[tuple[int, int], RealLinearOp] = {}
    for k in (1, 2, 3):
        table_i[(0, k)] = compose(g[k], g[4]).scale(half_i)
    for k, m in ((1, 2), (1, 3), (2, 3)):
        table_i[(k, m)] = commutator(g[k], g[m]).scale(quarter)
    if label == "I":
        return LorentzSet("I", table_i)

    c_op = RealLinearOp.conjugation()
    g2c = compose(g[2], c_op)
    g0g2c = compose(g.gamma0, g2c)
    table_ii = {
        (0, 1): g2c.scale(sc(0, 0, Fraction(-1, 2))),
        (0, 2): g2c.scale(sc(Fraction(-1, 2))),
        (0, 3): g.gamma0.scale(HALF),
        (2, 3): g0g2c.scale(sc(Fraction(-1, 2))),
        (1, 3): g0g2c.scale(sc(0, 0, Fraction(-1, 2))),  # s^{31} = +i/2 g0 g2 C
        (1, 2): RealLinearOp.identity().scale(sc(0, 0, Fraction(-1, 2))),
    }
    if label == "II":
        return LorentzSet("II", table_ii)

    table_ts = {p: table_i[p] + table_ii[p] for p in _PAIRS}
    if label == "TS":
        return LorentzSet("TS", table_ts)

    table_v = dict(table_ts)
    for k in (1, 2, 3):
        table_v[(0, k)] = -table_i[(0, k)] + table_ii[(0, k)]
    return LorentzSet("V", table_v)


def _so13_rhs(s: LorentzSet, mu: int, nu: int, rho: int, sig: int) -> RealLinearOp:
    out = RealLinearOp.zero()
    if mu == rho:
        out = out - s(nu, sig).scale(sc(METRIC[mu]))
    if rho == nu:
        out = out - s(sig, mu).scale(sc(METRIC[rho]))
    if nu == sig:
        out = out - s(mu, rho).scale(sc(METRIC[nu]))
    if sig == mu:
        out = out - s(rho, nu).scale(sc(METRIC[sig]))
    return out


def verify_so13(ls: LorentzSet) -> AlgebraClosureReport:
    """All 15 unordered generator pairs against the metric relations."""
    rep = AlgebraClosureReport(claim_id=f"CL-LOR-28-{ls.label}", element_count=6)
    for (mu, nu), (rho, sig) in combinations(_PAIRS, 2):
        lhs = commutator(ls(mu, nu), ls(rho, sig))
        rep.record(f"[s{mu}{nu},s{rho}{sig}]",
                   lhs - _so13_rhs(ls, mu, nu, rho, sig))
    return rep


def cross_commutators(a: LorentzSet, b: LorentzSet) -> list[tuple[str, RealLinearOp]]:
    """All 36 cross brackets [a^{mu nu}, b^{rho sigma}], reported raw.

    These are observed to vanish for the two spinor sets but that is not
    asserted anywhere; callers decide what to do with the table.
    """
    out = []
    for (mu, nu) in _PAIRS:
        for (rho, sig) in _PAIRS:
            out.append((f"[{a.label}{mu}{nu},{b.label}{rho}{sig}]",
                        commutator(a(mu, nu), b(rho, sig))))
    return out


# ---------------------------------------------------------------------------
# Transition operator and the explicit spin-1 block
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TransitionW:
    W: RealLinearOp
    W_inv: RealLinearOp


def build_transition_w() -> TransitionW:
    """The exact block operator W (and its inverse) that diagonalizes the
    spatial rotation block of the sum set; entries mix 1/sqrt2 with
    conjugation components."""
    r = SQ = sc(0, Fraction(1, 2))          # 1/sqrt2
    mr = sc(0, Fraction(-1, 2))             # -1/sqrt2
    i1 = I_UNIT
    w_lin = Matrix4([
        [ONE, ZERO, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO],
        [ZERO, ZERO, ZERO, r],
        [ZERO, ZERO, ZERO, mr],
    ])
    w_anti = Matrix4([
        [ZERO, ZERO, ZERO, ZERO],
        [ZERO, ZERO, i1, ZERO],
        [ZERO, mr, ZERO, ZERO],
        [ZERO, mr, ZERO, ZERO],
    ])
    winv_lin = Matrix4([
        [ONE, ZERO, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO],
        [ZERO, ZERO, r, mr],
    ])
    winv_anti = Matrix4([
        [ZERO, ZERO, ZERO, ZERO],
        [ZERO, ZERO, mr, mr],
        [ZERO, i1, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO],
    ])
    return TransitionW(W=RealLinearOp(w_lin, w_anti),
                       W_inv=RealLinearOp(winv_lin, winv_anti))


def conjugate_spin_block(w: TransitionW, ls: LorentzSet) -> tuple[RealLinearOp, ...]:
    """W s^{23} W^-1, W s^{31} W^-1, W s^{12} W^-1 for the TS set."""
    if ls.label != "TS":
        raise ValueError("spin-block conjugation is defined on the TS set")
    out = []
    for (mu, nu) in ((2, 3), (3, 1), (1, 2)):
        out.append(compose(compose(w.W, ls(mu, nu)), w.W_inv))
    return tuple(out)


def expected_spin_block() -> tuple[RealLinearOp, ...]:
    """The printed explicit spin-1 matrices the conjugation must reproduce."""
    r = sc(0, Fraction(1, 2))
    mr = sc(0, Fraction(-1, 2))
    ir = sc(0, 0, 0, Fraction(1, 2))    # i/sqrt2
    mir = sc(0, 0, 0, Fraction(-1, 2))
    s1 = RealLinearOp.from_antilinear(Matrix4([
        [ZERO, ZERO, ir, ZERO],
        [ZERO, ZERO, mr, ZERO],
        [mir, r, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO],
    ]))
    s2 = RealLinearOp.from_antilinear(Matrix4([
        [ZERO, ZERO, r, ZERO],
        [ZERO, ZERO, mir, ZERO],
        [mr, ir, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ZERO],
    ]))
    s3 = RealLinearOp.from_linear(Matrix4.diag(-I_UNIT, I_UNIT, ZERO, ZERO))
    return s1, s2, s3


def verify_spin_block(w: TransitionW, ls: LorentzSet) -> AlgebraClosureReport:
    """Exact equality with the printed matrices, W W^-1 = W^-1 W = 1, and
    the spin-1 Casimir block sum_j (s_j)^2 = -2 diag(1, 1, 1, 0)."""
    rep = AlgebraClosureReport(claim_id="CL-EQ26", element_count=3)
    ident = RealLinearOp.identity()
    rep.record("W W^-1 - 1", compose(w.W, w.W_inv) - ident)
    rep.record("W^-1 W - 1", compose(w.W_inv, w.W) - ident)
    got = conjugate_spin_block(w, ls)
    want = expected_spin_block()
    for j, (a, b) in enumerate(zip(got, want), start=1):
        rep.record(f"spin block s{j}", a - b)
    total = RealLinearOp.zero()
    for a in got:
        total = total + compose(a, a)
    casimir_want = RealLinearOp.from_linear(
        Matrix4.diag(sc(-2), sc(-2), sc(-2), ZERO))
    rep.record("sum s_j^2 + 2 diag(1,1,1,0)", total - casimir_want)
    return rep


# ---------------------------------------------------------------------------
# Casimir invariants
# ---------------------------------------------------------------------------

def casimir_so13(ls: LorentzSet) -> tuple[RealLinearOp, RealLinearOp]:
    """C1 = (1/2) s_{mu nu} s^{mu nu} and the pseudoscalar
    C2 = (1/4) eps_{mu nu rho sigma} s^{mu nu} s^{rho sigma},
    indices moved with the diagonal metric and eps_{0123} = +1."""
    c1 = RealLinearOp.zero()
    for mu in range(4):
        for nu in range(4):
            if mu == nu:
                continue
            weight = sc(METRIC[mu] * METRIC[nu])
            c1 = c1 + compose(ls(mu, nu), ls(mu, nu)).scale(weight)
    c1 = c1.scale(HALF)

    c2 = RealLinearOp.zero()
    for perm in permutations(range(4)):
        sign = _perm_sign(perm)
        mu, nu, rho, sig = perm
        c2 = c2 + compose(ls(mu, nu), ls(rho, sig)).scale(sc(sign))
    c2 = c2.scale(sc(Fraction(1, 4)))
    return c1, c2


def _perm_sign(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def hermiticity_table(ls: LorentzSet) -> list[tuple[str, str]]:
    """Adjoint character of each generator under the fixed convention."""
    out = []
    for name, op in ls.named():
        adj = adjoint(op)
        if adj == -op:
            kind = "anti-hermitian"
        elif adj == op:
            kind = "hermitian"
        else:
            kind = "neither"
        out.append((name, kind))
    return out

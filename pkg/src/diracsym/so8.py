"""The 64-element real Clifford family, the 28 rotation generators built
from it, and the 31-dimensional invariance algebra.

All verification here is exact: commutators are evaluated in the
``RealLinearOp`` algebra and compared entrywise against the structure
relations, with any nonzero residual operator attached to the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .exact import (
    HALF,
    I_UNIT,
    ONE,
    RealLinearOp,
    RealSpan,
    ZERO,
    commutator,
    compose,
    is_anti_hermitian,
    real_span_dim,
    sc,
)
from .gammas import GammaSet

__all__ = [
    "AlgebraClosureReport",
    "So8Set",
    "build_clifford64",
    "clifford64_closure_report",
    "build_so8",
    "verify_so8",
    "verify_su2_pair",
    "build_algebra31",
    "verify_algebra31",
]


@dataclass
class AlgebraClosureReport:
    """Outcome of an exact relation sweep over a generator family.

    ``failures`` holds (relation label, residual operator) pairs; the check
    counts as verified-exact only when the list is empty.
    """

    claim_id: str
    element_count: int
    real_dimension: int | None = None
    relations_checked: int = 0
    failures: list[tuple[str, RealLinearOp]] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "verified-exact" if not self.failures else "failed"

    def record(self, label: str, residual: RealLinearOp) -> None:
        self.relations_checked += 1
        if not residual.is_zero:
            self.failures.append((label, residual))


# ---------------------------------------------------------------------------
# 64-element family
# ---------------------------------------------------------------------------

_UNITS = (sc(1), sc(-1), sc(0, 0, 1), sc(0, 0, -1))


def _key_neg(part):
    if part is None:
        return None
    return tuple((-a, -b, -c, -d) for (a, b, c, d) in part)


def _key_mul_i(part):
    # i * ((ra + rb s) + i (ia + ib s)) = (-ia - ib s) + i (ra + rb s)
    if part is None:
        return None
    return tuple((-c, -d, a, b) for (a, b, c, d) in part)


def _unit_orbit(key):
    """The four left unit multiples {k, -k, ik, -ik} of an operator key."""
    L, A = key
    ik = (_key_mul_i(L), _key_mul_i(A))
    return (key, (_key_neg(L), _key_neg(A)), ik,
            (_key_neg(ik[0]), _key_neg(ik[1])))


def _stand_cd(g: GammaSet) -> list[RealLinearOp]:
    """The 16 ordered products of distinct matrices from {g0, g1, g2, g3}."""
    base = [g.gamma0, g[1], g[2], g[3]]
    out = []
    for r in range(5):
        for idx in combinations(range(4), r):
            prod = RealLinearOp.identity()
            for k in idx:
                prod = compose(prod, base[k])
            out.append(prod)
    return out


def build_clifford64(g: GammaSet) -> list[RealLinearOp]:
    """stand ∪ i*stand ∪ C*stand ∪ iC*stand over the 16 base products."""
    stand = _stand_cd(g)
    i_op = RealLinearOp.identity().scale(I_UNIT)
    c_op = RealLinearOp.conjugation()
    ic_op = c_op.scale(I_UNIT)
    out = list(stand)
    out += [compose(i_op, m) for m in stand]
    out += [compose(c_op, m) for m in stand]
    out += [compose(ic_op, m) for m in stand]
    return out


def clifford64_closure_report(elems: list[RealLinearOp]) -> AlgebraClosureReport:
    """Span dimension plus closure of all pairwise products up to units."""
    rep = AlgebraClosureReport(claim_id="CL-CLIFF64",
                               element_count=len(elems),
                               real_dimension=real_span_dim(elems))
    table = {e.key() for e in elems}
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            prod = compose(a, b)
            rep.relations_checked += 1
            if not any(k in table for k in _unit_orbit(prod.key())):
                rep.failures.append((f"product({i},{j}) not in set", prod))
    return rep


# ---------------------------------------------------------------------------
# 28 generators and their commutation table
# ---------------------------------------------------------------------------

class So8Set:
    """Antisymmetric table s[(a, b)] for extended indices a, b = 1..8.

    s(a, b) = (1/4)[gamma^a, gamma^b] for a, b <= 7 and s(a, 8) =
    (1/2) gamma^a; lookups handle index order and coincidence.
    """

    def __init__(self, table: dict[tuple[int, int], RealLinearOp]):
        self._table = table

    def __call__(self, a: int, b: int) -> RealLinearOp:
        if a == b:
            return RealLinearOp.zero()
        if a < b:
            return self._table[(a, b)]
        return -self._table[(b, a)]

    @property
    def generators(self) -> dict[tuple[int, int], RealLinearOp]:
        return dict(self._table)

    def labels(self):
        return sorted(self._table)


def build_so8(g: GammaSet) -> So8Set:
    table: dict[tuple[int, int], RealLinearOp] = {}
    quarter = sc("1/4")
    for a in range(1, 8):
        for b in range(a + 1, 8):
            table[(a, b)] = commutator(g[a], g[b]).scale(quarter)
        table[(a, 8)] = g[a].scale(HALF)
    return So8Set(table)


def _so8_rhs(s: So8Set, a: int, b: int, c: int, d: int) -> RealLinearOp:
    """delta^{ac} s^{bd} + delta^{cb} s^{da} + delta^{bd} s^{ac}
    + delta^{da} s^{cb} with Euclidean deltas."""
    out = RealLinearOp.zero()
    if a == c:
        out = out + s(b, d)
    if c == b:
        out = out + s(d, a)
    if b == d:
        out = out + s(a, c)
    if d == a:
        out = out + s(c, b)
    return out


def verify_so8(s: So8Set) -> AlgebraClosureReport:
    """Check every unordered pair of the 28 generators against the rotation
    algebra structure relations, plus anti-Hermiticity of each generator."""
    labels = s.labels()
    rep = AlgebraClosureReport(claim_id="CL-SO8-19", element_count=len(labels))
    for (a, b), (c, d) in combinations(labels, 2):
        lhs = commutator(s(a, b), s(c, d))
        rhs = _so8_rhs(s, a, b, c, d)
        rep.record(f"[s{a}{b},s{c}{d}]", lhs - rhs)
    for (a, b) in labels:
        op = s(a, b)
        rep.relations_checked += 1
        if not is_anti_hermitian(op):
            rep.failures.append((f"s{a}{b} not anti-Hermitian", op))
    rep.real_dimension = real_span_dim([s(a, b) for (a, b) in labels])
    return rep


_TRIPLET_A = ((2, 3), (3, 1), (1, 2))
_TRIPLET_B = ((4, 5), (6, 4), (5, 6))


def verify_su2_pair(s: So8Set) -> AlgebraClosureReport:
    """Both spin-1/2 triplets close per the structure relations, commute
    with each other, and (delegated) commute with the free evolution
    operator in the nonlocal-diagonal frame."""
    from .evolution import build_form, formal_commutator

    rep = AlgebraClosureReport(claim_id="CL-SU2-PAIR", element_count=6)
    for trip in (_TRIPLET_A, _TRIPLET_B):
        for (a, b), (c, d) in combinations(trip, 2):
            lhs = commutator(s(a, b), s(c, d))
            rhs = _so8_rhs(s, a, b, c, d)
            rep.record(f"[s{a}{b},s{c}{d}]", lhs - rhs)
    for (a, b) in _TRIPLET_A:
        for (c, d) in _TRIPLET_B:
            rep.record(f"[s{a}{b},s{c}{d}] cross", commutator(s(a, b), s(c, d)))
    form = build_form("FW-A", include_potential=False)
    for (a, b) in _TRIPLET_A + _TRIPLET_B:
        res = formal_commutator(s(a, b), form)
        rep.relations_checked += 1
        if res.status != "commutes":
            rep.failures.append((f"s{a}{b} vs free evolution", res.total_residual()))
    return rep


# ---------------------------------------------------------------------------
# 31-dimensional invariance algebra
# ---------------------------------------------------------------------------

def build_algebra31(g: GammaSet) -> list[tuple[str, RealLinearOp]]:
    """The 15 rotation generators on indices 1..6, their i*gamma^0
    multiples, and i*gamma^0 itself: 15 + 15 + 1 named elements."""
    s = build_so8(g)
    ig0 = g.gamma0.scale(I_UNIT)
    out: list[tuple[str, RealLinearOp]] = []
    for a in range(1, 7):
        for b in range(a + 1, 7):
            out.append((f"s{a}{b}", s(a, b)))
    for a in range(1, 7):
        for b in range(a + 1, 7):
            out.append((f"ig0*s{a}{b}", compose(ig0, s(a, b))))
    out.append(("ig0", ig0))
    return out


def verify_algebra31(elems: list[tuple[str, RealLinearOp]]) -> AlgebraClosureReport:
    """Span dimension 31 and commutator closure within the real span."""
    ops = [op for _, op in elems]
    rep = AlgebraClosureReport(claim_id="CL-31DIM", element_count=len(elems))
    span = RealSpan(ops)
    rep.real_dimension = span.dim
    for (la, a), (lb, b) in combinations(elems, 2):
        br = commutator(a, b)
        rep.relations_checked += 1
        if not span.contains(br):
            rep.failures.append((f"[{la},{lb}] leaves span", br))
    return rep

"""Exact arithmetic over Q(i, sqrt2) and real-linear operators on 4-spinors.

Every symbolic check in this package reduces to algebra in two layers built
here:

* ``ExactScalar`` -- an element (ra + rb*sqrt2) + i*(ia + ib*sqrt2) with
  rational coefficients, closed under ring operations and complex
  conjugation.  This field contains every matrix entry that occurs in the
  verified operator sets (units, halves, factors of 1/sqrt2).
* ``RealLinearOp`` -- an operator Q = L + A*C on 4-component spinors, where
  L and A are exact 4x4 matrices and C is entrywise complex conjugation
  (C psi = psi*).  Antilinear operators such as charge-conjugation-like
  generators live here; composition follows

      (L1 + A1*C)(L2 + A2*C) = (L1 L2 + A1 conj(A2)) + (L1 A2 + A1 conj(L2)) C.

The adjoint convention for the antilinear part is (A*C)^dag = A^T * C, so
that C itself is self-adjoint.  Under this convention the antilinear
generators used elsewhere in the package come out anti-Hermitian.

Operators are viewed as vectors over the real subfield Q(sqrt2) for rank
computations: 2 parts x 16 entries x 2 real components = 64 coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "ExactScalar",
    "Matrix4",
    "RealLinearOp",
    "sc",
    "ZERO",
    "ONE",
    "I_UNIT",
    "HALF",
    "SQRT2_INV",
    "compose",
    "commutator",
    "anticommutator",
    "adjoint",
    "is_anti_hermitian",
    "is_hermitian",
    "real_span_dim",
    "RealSpan",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


class ExactScalar:
    """(ra + rb*sqrt2) + i*(ia + ib*sqrt2) with Fraction coefficients."""

    __slots__ = ("ra", "rb", "ia", "ib")

    def __init__(self, ra=0, rb=0, ia=0, ib=0):
        self.ra = ra if isinstance(ra, Fraction) else Fraction(ra)
        self.rb = rb if isinstance(rb, Fraction) else Fraction(rb)
        self.ia = ia if isinstance(ia, Fraction) else Fraction(ia)
        self.ib = ib if isinstance(ib, Fraction) else Fraction(ib)

    def __bool__(self):
        return bool(self.ra or self.rb or self.ia or self.ib)

    @property
    def is_zero(self):
        return not self

    def __add__(self, other):
        return ExactScalar(self.ra + other.ra, self.rb + other.rb,
                           self.ia + other.ia, self.ib + other.ib)

    def __sub__(self, other):
        return ExactScalar(self.ra - other.ra, self.rb - other.rb,
                           self.ia - other.ia, self.ib - other.ib)

    def __neg__(self):
        return ExactScalar(-self.ra, -self.rb, -self.ia, -self.ib)

    def __mul__(self, other):
        # Split into Q(sqrt2) real/imag pairs: (R1 + i I1)(R2 + i I2).
        a1, b1, c1, d1 = self.ra, self.rb, self.ia, self.ib
        a2, b2, c2, d2 = other.ra, other.rb, other.ia, other.ib
        return ExactScalar(
            a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2,
            a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            a1 * c2 + 2 * b1 * d2 + c1 * a2 + 2 * d1 * b2,
            a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2,
        )

    def conj(self):
        """Complex conjugate; sqrt2 is real so only the i-pair flips."""
        return ExactScalar(self.ra, self.rb, -self.ia, -self.ib)

    def __eq__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return (self.ra == other.ra and self.rb == other.rb
                and self.ia == other.ia and self.ib == other.ib)

    def __hash__(self):
        return hash((self.ra, self.rb, self.ia, self.ib))

    def __complex__(self):
        s = 2.0 ** 0.5
        return complex(float(self.ra) + float(self.rb) * s,
                       float(self.ia) + float(self.ib) * s)

    def __repr__(self):
        return f"ExactScalar({self.ra}, {self.rb}, {self.ia}, {self.ib})"


def sc(ra=0, rb=0, ia=0, ib=0) -> ExactScalar:
    """Shorthand constructor accepting ints, Fractions or strings."""
    return ExactScalar(Fraction(ra), Fraction(rb), Fraction(ia), Fraction(ib))


ZERO = sc(0)
ONE = sc(1)
I_UNIT = sc(0, 0, 1)
HALF = sc(Fraction(1, 2))
SQRT2_INV = sc(0, Fraction(1, 2))  # 1/sqrt2 = sqrt2/2


class Matrix4:
    """Immutable 4x4 matrix of ExactScalar with exact product and equality."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[ExactScalar]]):
        self.rows = tuple(tuple(r) for r in rows)
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise ValueError("Matrix4 requires a 4x4 array of scalars")

    @staticmethod
    def zero() -> "Matrix4":
        return Matrix4([[ZERO] * 4 for _ in range(4)])

    @staticmethod
    def identity() -> "Matrix4":
        return Matrix4([[ONE if i == j else ZERO for j in range(4)]
                        for i in range(4)])

    @staticmethod
    def diag(*entries: ExactScalar) -> "Matrix4":
        return Matrix4([[entries[i] if i == j else ZERO for j in range(4)]
                        for i in range(4)])

    def __matmul__(self, other: "Matrix4") -> "Matrix4":
        rows = []
        orows = other.rows
        for r in self.rows:
            out = [ZERO, ZERO, ZERO, ZERO]
            for k in range(4):
                x = r[k]
                if not x:
                    continue
                ok = orows[k]
                for j in range(4):
                    y = ok[j]
                    if y:
                        out[j] = out[j] + x * y
            rows.append(out)
        return Matrix4(rows)

    def __add__(self, other):
        return Matrix4([[a + b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix4([[a - b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix4([[-a for a in r] for r in self.rows])

    def scale(self, c: ExactScalar) -> "Matrix4":
        return Matrix4([[c * a for a in r] for r in self.rows])

    def conj(self) -> "Matrix4":
        return Matrix4([[a.conj() for a in r] for r in self.rows])

    def transpose(self) -> "Matrix4":
        return Matrix4([[self.rows[j][i] for j in range(4)] for i in range(4)])

    def dagger(self) -> "Matrix4":
        return Matrix4([[self.rows[j][i].conj() for j in range(4)]
                        for i in range(4)])

    @property
    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix4):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix4({[[repr(a) for a in r] for r in self.rows]})"


def _mat_or_none(m: Matrix4 | None) -> Matrix4 | None:
    if m is not None and m.is_zero:
        return None
    return m


class RealLinearOp:
    """Q = L + A*C: linear part L, antilinear part A followed by conjugation.

    Either part may be None, meaning identically zero; the algebra below
    short-circuits on missing parts, which matters for the large exhaustive
    closure checks.
    """

    __slots__ = ("L", "A")

    def __init__(self, L: Matrix4 | None = None, A: Matrix4 | None = None):
        self.L = _mat_or_none(L)
        self.A = _mat_or_none(A)

    @staticmethod
    def from_linear(m: Matrix4) -> "RealLinearOp":
        return RealLinearOp(L=m)

    @staticmethod
    def from_antilinear(m: Matrix4) -> "RealLinearOp":
        return RealLinearOp(A=m)

    @staticmethod
    def identity() -> "RealLinearOp":
        return RealLinearOp(L=Matrix4.identity())

    @staticmethod
    def conjugation() -> "RealLinearOp":
        """The antilinear involution C with C psi = psi*."""
        return RealLinearOp(A=Matrix4.identity())

    @staticmethod
    def zero() -> "RealLinearOp":
        return RealLinearOp()

    @property
    def is_zero(self) -> bool:
        return self.L is None and self.A is None

    @property
    def linear_part(self) -> Matrix4:
        return self.L if self.L is not None else Matrix4.zero()

    @property
    def antilinear_part(self) -> Matrix4:
        return self.A if self.A is not None else Matrix4.zero()

    def __add__(self, other: "RealLinearOp") -> "RealLinearOp":
        def add(a, b):
            if a is None:
                return b
            if b is None:
                return a
            return a + b
        return RealLinearOp(add(self.L, other.L), add(self.A, other.A))

    def __sub__(self, other: "RealLinearOp") -> "RealLinearOp":
        return self + (-other)

    def __neg__(self) -> "RealLinearOp":
        return RealLinearOp(None if self.L is None else -self.L,
                            None if self.A is None else -self.A)

    def scale(self, c: ExactScalar) -> "RealLinearOp":
        """Left multiplication by the scalar c: (L, A) -> (cL, cA)."""
        return RealLinearOp(None if self.L is None else self.L.scale(c),
                            None if self.A is None else self.A.scale(c))

    def scale_right(self, c: ExactScalar) -> "RealLinearOp":
        """Right multiplication by c: the antilinear part sees conj(c)."""
        return RealLinearOp(
            None if self.L is None else self.L.scale(c),
            None if self.A is None else self.A.scale(c.conj()))

    def __matmul__(self, other: "RealLinearOp") -> "RealLinearOp":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, RealLinearOp):
            return NotImplemented
        return (self.linear_part == other.linear_part
                and self.antilinear_part == other.antilinear_part)

    def __hash__(self):
        return hash((self.L, self.A))

    def key(self) -> tuple:
        """Hashable canonical form (used by closure lookups)."""
        def mk(m):
            if m is None:
                return None
            return tuple((e.ra, e.rb, e.ia, e.ib) for r in m.rows for e in r)
        return (mk(self.L), mk(self.A))

    def apply(self, vec: Sequence[complex]) -> list[complex]:
        """Float evaluation on a complex 4-vector (for sanity checks only)."""
        out = [0j] * 4
        if self.L is not None:
            for i in range(4):
                out[i] += sum(complex(self.L.rows[i][j]) * vec[j]
                              for j in range(4))
        if self.A is not None:
            for i in range(4):
                out[i] += sum(complex(self.A.rows[i][j]) * vec[j].conjugate()
                              for j in range(4))
        return out

    def __repr__(self):
        return f"RealLinearOp(L={self.L!r}, A={self.A!r})"


def compose(q1: RealLinearOp, q2: RealLinearOp) -> RealLinearOp:
    """Operator product q1 q2 (q2 acts first)."""
    L1, A1 = q1.L, q1.A
    L2, A2 = q2.L, q2.A
    L = None
    A = None
    if L1 is not None and L2 is not None:
        L = L1 @ L2
    if A1 is not None and A2 is not None:
        t = A1 @ A2.conj()
        L = t if L is None else L + t
    if L1 is not None and A2 is not None:
        A = L1 @ A2
    if A1 is not None and L2 is not None:
        t = A1 @ L2.conj()
        A = t if A is None else A + t
    return RealLinearOp(L, A)


def commutator(q1: RealLinearOp, q2: RealLinearOp) -> RealLinearOp:
    return compose(q1, q2) - compose(q2, q1)


def anticommutator(q1: RealLinearOp, q2: RealLinearOp) -> RealLinearOp:
    return compose(q1, q2) + compose(q2, q1)


def adjoint(q: RealLinearOp) -> RealLinearOp:
    """(L + A*C)^dag = L^dag + A^T * C."""
    return RealLinearOp(
        None if q.L is None else q.L.dagger(),
        None if q.A is None else q.A.transpose())


def is_anti_hermitian(q: RealLinearOp) -> bool:
    return adjoint(q) == -q


def is_hermitian(q: RealLinearOp) -> bool:
    return adjoint(q) == q


# ---------------------------------------------------------------------------
# Rank over the real subfield Q(sqrt2)
# ---------------------------------------------------------------------------

def _q2_inv(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    # 1/(a + b sqrt2) = (a - b sqrt2)/(a^2 - 2 b^2); denominator is nonzero
    # for any nonzero rational pair since sqrt2 is irrational.
    den = a * a - 2 * b * b
    return a / den, -b / den


def _q2_mul(a, b, c, d):
    return a * c + 2 * b * d, a * d + b * c


def _op_coords(op: RealLinearOp) -> dict[int, tuple[Fraction, Fraction]]:
    """Sparse coordinates of op in the 64-dim space over Q(sqrt2)."""
    coords: dict[int, tuple[Fraction, Fraction]] = {}
    for part_idx, m in ((0, op.L), (1, op.A)):
        if m is None:
            continue
        base = part_idx * 32
        for i in range(4):
            for j in range(4):
                e = m.rows[i][j]
                k = base + 2 * (4 * i + j)
                if e.ra or e.rb:
                    coords[k] = (e.ra, e.rb)
                if e.ia or e.ib:
                    coords[k + 1] = (e.ia, e.ib)
    return coords


class RealSpan:
    """Incremental row-reduced span of operators over Q(sqrt2).

    Rows are kept sparse ({coordinate: (a, b)} with value a + b*sqrt2) and
    fully reduced, so membership tests are a single reduction pass.
    """

    def __init__(self, ops: Iterable[RealLinearOp] = ()):
        self.pivots: dict[int, dict[int, tuple[Fraction, Fraction]]] = {}
        for op in ops:
            self.add(op)

    def _reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            a, b = row[lead]
            for k, (c, d) in piv.items():
                x, y = _q2_mul(a, b, c, d)
                if k in row:
                    ra, rb = row[k]
                    ra, rb = ra - x, rb - y
                    if ra or rb:
                        row[k] = (ra, rb)
                    else:
                        del row[k]
                else:
                    row[k] = (-x, -y)
        return row

    def add(self, op: RealLinearOp) -> bool:
        """Insert op; returns True if it enlarged the span."""
        row = self._reduce(_op_coords(op))
        if not row:
            return False
        lead = min(row)
        inv_a, inv_b = _q2_inv(*row[lead])
        norm = {k: _q2_mul(inv_a, inv_b, a, b) for k, (a, b) in row.items()}
        # Back-substitute into existing pivot rows to keep full reduction.
        for plead, prow in self.pivots.items():
            if lead in prow:
                a, b = prow[lead]
                for k, (c, d) in norm.items():
                    x, y = _q2_mul(a, b, c, d)
                    if k in prow:
                        ra, rb = prow[k]
                        ra, rb = ra - x, rb - y
                        if ra or rb:
                            prow[k] = (ra, rb)
                        else:
                            del prow[k]
                    else:
                        prow[k] = (-x, -y)
        self.pivots[lead] = norm
        return True

    def contains(self, op: RealLinearOp) -> bool:
        return not self._reduce(_op_coords(op))

    @property
    def dim(self) -> int:
        return len(self.pivots)


def real_span_dim(ops: Sequence[RealLinearOp]) -> int:
    """Dimension of the span of ops over Q(sqrt2) by exact elimination."""
    if not ops:
        raise ValueError("real_span_dim requires a nonempty operator list")
    return RealSpan(ops).dim

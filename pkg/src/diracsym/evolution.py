"""Formal invariance engine for constant symmetry candidates.

An evolution operator is held as a formal sum  sum_k c_k (x) b_k  of exact
constant coefficients c_k (RealLinearOp) against commuting real scalar
basis operators b_k drawn from {d0, d1, d2, d3, omega, V, 1}:

* d_mu   -- partial derivatives,
* omega  -- sqrt(-Laplacian + m^2), a real Fourier multiplier,
* V      -- the attractive radial potential (real multiplication),
* 1      -- the identity.

The basis operators are real and commute with every constant matrix and
with entrywise conjugation, and they are functionally independent on the
dense test space, so

    [q, sum_k c_k (x) b_k] = sum_k [q, c_k] (x) b_k

vanishes exactly when every coefficient commutator vanishes.  That makes
invariance of a constant operator decidable by pure matrix algebra, one
term at a time.  Antilinear candidates are sensitive to whether a term's
coefficient is real or imaginary, so the two normalizations of the
potential term (FW-A vs FW-B below) are kept as distinct first-class
forms and are never merged.

The mass enters only through the real positive factor m on one term; the
per-term verdicts are independent of its value, so it is fixed to 1 here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import I_UNIT, ONE, RealLinearOp, commutator, sc
from .gammas import build_gamma_set

__all__ = [
    "BASIS_SYMBOLS",
    "StructuredEvolutionOp",
    "CommutatorReport",
    "build_form",
    "FORM_LABELS",
    "formal_commutator",
    "sweep_invariance",
]

BASIS_SYMBOLS = ("d0", "d1", "d2", "d3", "omega", "V", "1")

FORM_LABELS = ("DIRAC-COULOMB", "COVARIANT", "FW-A", "FW-B")


@dataclass(frozen=True)
class StructuredEvolutionOp:
    """Formal sum of (constant coefficient, basis symbol) terms."""

    label: str
    terms: tuple[tuple[RealLinearOp, str], ...]

    def __post_init__(self):
        for _, b in self.terms:
            if b not in BASIS_SYMBOLS:
                raise ValueError(f"unknown basis symbol {b!r}")

    @property
    def has_potential(self) -> bool:
        return any(b == "V" for _, b in self.terms)


@dataclass
class CommutatorReport:
    """Per-basis-symbol residuals of [q, D]; commutes iff all vanish."""

    form_label: str
    residuals: dict[str, RealLinearOp] = field(default_factory=dict)

    @property
    def failed_terms(self) -> list[str]:
        return [b for b, r in self.residuals.items() if not r.is_zero]

    @property
    def status(self) -> str:
        bad = self.failed_terms
        return "commutes" if not bad else f"fails({','.join(bad)})"

    @property
    def commutes(self) -> bool:
        return not self.failed_terms

    def total_residual(self) -> RealLinearOp:
        out = RealLinearOp.zero()
        for r in self.residuals.values():
            out = out + r
        return out


def build_form(label: str, include_potential: bool = True) -> StructuredEvolutionOp:
    """Assemble one of the supported evolution forms.

    DIRAC-COULOMB   d0 + g0 g^j (x) dj + i m g0 (x) 1 + (-i)(x) V
    COVARIANT       (i g0)(x) d0 + (i g^j)(x) dj + (-m)(x) 1 + 1 (x) V
    FW-A            d0 + (i g0)(x) omega + (-i)(x) V
    FW-B            d0 + (i g0)(x) omega + (-1)(x) V

    FW-A and FW-B differ only in whether the potential term carries the
    imaginary unit after normalization; linear candidates cannot tell them
    apart but antilinear ones can.
    """
    g = build_gamma_set()
    ident = RealLinearOp.identity()
    ig0 = g.gamma0.scale(I_UNIT)
    minus_i = ident.scale(sc(0, 0, -1))
    minus_one = ident.scale(sc(-1))

    if label == "DIRAC-COULOMB":
        terms = [(ident, "d0")]
        terms += [(g.gamma0 @ g[j], f"d{j}") for j in (1, 2, 3)]
        terms.append((ig0, "1"))
        pot = (minus_i, "V")
    elif label == "COVARIANT":
        terms = [(ig0, "d0")]
        terms += [(g[j].scale(I_UNIT), f"d{j}") for j in (1, 2, 3)]
        terms.append((minus_one, "1"))
        pot = (ident, "V")
    elif label == "FW-A":
        terms = [(ident, "d0"), (ig0, "omega")]
        pot = (minus_i, "V")
    elif label == "FW-B":
        terms = [(ident, "d0"), (ig0, "omega")]
        pot = (minus_one, "V")
    else:
        raise ValueError(f"unknown form label {label!r}")

    if include_potential:
        terms.append(pot)
        name = label
    else:
        name = label + "-FREE"
    return StructuredEvolutionOp(label=name, terms=tuple(terms))


def formal_commutator(q: RealLinearOp, d: StructuredEvolutionOp) -> CommutatorReport:
    """[q, D] term by term; q must be a constant operator (enforced by type)."""
    rep = CommutatorReport(form_label=d.label)
    for coeff, basis in d.terms:
        res = commutator(q, coeff)
        prev = rep.residuals.get(basis)
        rep.residuals[basis] = res if prev is None else prev + res
    return rep


def sweep_invariance(ops: list[tuple[str, RealLinearOp]],
                     d: StructuredEvolutionOp) -> list[tuple[str, CommutatorReport]]:
    """Per-operator verdicts for a named operator family against one form."""
    return [(name, formal_commutator(op, d)) for name, op in ops]

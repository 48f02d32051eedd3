"""Formal invariance engine: per-term commutators against the structured
evolution forms."""

import pytest

from diracsym.exact import I_UNIT, RealLinearOp, commutator, compose, sc
from diracsym.evolution import (
    BASIS_SYMBOLS,
    FORM_LABELS,
    StructuredEvolutionOp,
    build_form,
    formal_commutator,
    sweep_invariance,
)
from diracsym.gammas import build_gamma_set
from diracsym.so8 import build_algebra31, build_so8

g = build_gamma_set()
s = build_so8(g)
a31 = build_algebra31(g)


def test_unknown_form_rejected():
    with pytest.raises(ValueError):
        build_form("FW-C")


def test_unknown_basis_symbol_rejected():
    with pytest.raises(ValueError):
        StructuredEvolutionOp(label="bad",
                              terms=((RealLinearOp.identity(), "d7"),))


def test_form_terms_match_published_shapes():
    dc = build_form("DIRAC-COULOMB")
    symbols = [b for _, b in dc.terms]
    assert symbols == ["d0", "d1", "d2", "d3", "1", "V"]
    cov = build_form("COVARIANT")
    assert [b for _, b in cov.terms] == ["d0", "d1", "d2", "d3", "1", "V"]
    fwa = build_form("FW-A")
    assert [b for _, b in fwa.terms] == ["d0", "omega", "V"]
    assert not build_form("FW-A", include_potential=False).has_potential


def test_fw_forms_differ_only_in_potential_coefficient():
    fa = build_form("FW-A")
    fb = build_form("FW-B")
    assert fa.terms[:-1] == fb.terms[:-1]
    ca = fa.terms[-1][0]
    cb = fb.terms[-1][0]
    assert ca == RealLinearOp.identity().scale(sc(0, 0, -1))
    assert cb == RealLinearOp.identity().scale(sc(-1))


def test_scalar_i_commutes_with_fw():
    i_op = RealLinearOp.identity().scale(I_UNIT)
    rep = formal_commutator(i_op, build_form("FW-A"))
    assert rep.commutes


def test_g5_distinguishes_fw_forms():
    rep_b = formal_commutator(g[5], build_form("FW-B"))
    assert rep_b.residuals["V"].is_zero
    rep_a = formal_commutator(g[5], build_form("FW-A"))
    assert rep_a.residuals["V"] == g[5].scale(sc(0, 0, 2))
    assert "V" in rep_a.failed_terms


def test_s12_fails_against_free_dirac_coulomb():
    form = build_form("DIRAC-COULOMB", include_potential=False)
    rep = formal_commutator(s(1, 2), form)
    assert not rep.commutes
    assert set(rep.failed_terms) == {"d1", "d2"}
    want = compose(g.gamma0, g[2])  # [s12, g0 g1] computed by hand
    assert rep.residuals["d1"] == want


def test_status_invariant_under_real_rescaling():
    form = build_form("FW-A")
    for name, op in a31[:5]:
        r1 = formal_commutator(op, form)
        r2 = formal_commutator(op.scale(sc("7/2")), form)
        assert r1.failed_terms == r2.failed_terms


LINEAR_SO6 = {"s12", "s13", "s14", "s23", "s24", "s34", "s56"}


def test_so6_sweep_splits_on_fw_a():
    so6 = a31[:15]
    verdicts = dict(sweep_invariance(so6, build_form("FW-A")))
    for name, rep in verdicts.items():
        if name in LINEAR_SO6:
            assert rep.commutes, name
        else:
            assert rep.failed_terms == ["V"], name


def test_so6_sweep_all_pass_on_fw_b():
    so6 = a31[:15]
    for name, rep in sweep_invariance(so6, build_form("FW-B")):
        assert rep.commutes, name


def test_full_31_set_commutes_with_free_fw():
    form = build_form("FW-A", include_potential=False)
    for name, rep in sweep_invariance(a31, form):
        assert rep.commutes, name


def test_pauli_gursey_commutes_with_covariant_form():
    from diracsym.observables import pauli_gursey_triple
    cov = build_form("COVARIANT")
    for name, rep in sweep_invariance(pauli_gursey_triple(), cov):
        assert rep.commutes, name


def test_verified_symmetries_close_under_bracket():
    # commuting operators must stay commuting after taking brackets
    form = build_form("FW-A", include_potential=False)
    ops = [op for _, op in a31]
    assert all(formal_commutator(op, form).commutes for op in ops)
    for i in range(0, len(ops), 5):
        for j in range(i + 1, len(ops), 7):
            br = commutator(ops[i], ops[j])
            assert formal_commutator(br, form).commutes

"""Eigenspace checks: the anticommuting invariant and the SO(4) blocks."""

import numpy as np
import pytest

from diracsym.radial import (
    RadialConfig,
    radial_d_apply,
    radial_h_apply,
    solve_radial,
    verify_johnson_lippmann,
    verify_so4,
)


def test_radial_h_reproduces_eigenvalue(radial_states, radial_cfg):
    from diracsym.radial import _quad
    for s in radial_states:
        HF, HG = radial_h_apply(s.F, s.G, s.kappa, s.r, s.du, radial_cfg.zalpha)
        res = np.sqrt(_quad((HF - s.energy * s.F) ** 2
                            + (HG - s.energy * s.G) ** 2, s.r, s.du))
        assert res < 1e-8, (s.n, s.kappa, res)


def test_d_maps_to_partner_sector(radial_states, radial_cfg):
    s = radial_states[0]
    sector, _ = radial_d_apply(s.F, s.G, s.kappa, s.r, s.du, radial_cfg.zalpha)
    assert sector == -s.kappa


def test_johnson_lippmann_report(radial_states, radial_cfg):
    rep = verify_johnson_lippmann(radial_states, radial_cfg.zalpha)
    for key, e in rep["states"].items():
        assert e["dh_commutator"] <= 1e-8, key
        assert e["kd_anticommutator"] == 0.0, key
        assert e["d_squared_deviation"] <= 1e-6, key
        if "partner_leak" in e:
            assert e["partner_leak"] <= 1e-6, key
        else:
            assert e["annihilation_norm"] <= 1e-6, key


def test_d_squared_values_match_closed_form(radial_states, radial_cfg):
    za = radial_cfg.zalpha
    rep = verify_johnson_lippmann(radial_states, za)
    for s in radial_states:
        e = rep["states"][f"n={s.n},kappa={s.kappa:+d}"]
        want = 1.0 + (s.energy ** 2 - 1.0) * s.kappa ** 2 / za ** 2
        assert abs(e["d_squared_theory"] - want) < 1e-14
        assert abs(e["d_squared_measured"] - want) <= 1e-6


def test_ground_state_annihilated(radial_states, radial_cfg):
    rep = verify_johnson_lippmann(radial_states, radial_cfg.zalpha)
    e = rep["states"]["n=1,kappa=-1"]
    assert e.get("partner_missing")
    assert e["annihilation_norm"] <= 1e-6
    # consistent with the vanishing squared-invariant scalar there
    assert abs(e["d_squared_theory"]) < 1e-9


def test_so4_blocks(radial_states, radial_cfg):
    rep = verify_so4(radial_states, radial_cfg.zalpha)
    assert set(rep["blocks"]) == {"n=2,j=0.5", "n=3,j=0.5", "n=3,j=1.5"}
    assert set(rep["incomplete"]) == {"n=1,j=0.5", "n=2,j=1.5"}
    for key, b in rep["blocks"].items():
        assert b["t_squared_deviation"] <= 1e-8, key
        assert b["so4_rotation_vector_defect"] <= 1e-8, key
        assert b["su2_half_sum"] <= 1e-8, key
        assert b["su2_half_diff"] <= 1e-8, key
        assert b["half_pair_commutation"] <= 1e-8, key
        assert sorted(np.round(b["t3_eigenvalues"], 12))[0] == -0.5
        assert sorted(np.round(b["t3_eigenvalues"], 12))[-1] == 0.5
        # the unhalved printed pair genuinely fails elementwise commutation
        assert b["printed_pair_cross_norm"] > 0.1, key


def test_so4_block_scalar_matches_invariant(radial_states, radial_cfg):
    rep = verify_so4(radial_states, radial_cfg.zalpha)
    for key, b in rep["blocks"].items():
        assert abs(b["d_squared_block"] - b["d_squared_theory"]) <= 1e-6, key
        assert b["d_asymmetry"] <= 1e-8, key


def test_missing_partner_flagged():
    cfg = RadialConfig(n_steps=1500, n_grid=2048)
    states = solve_radial(2, [-1], cfg)   # kappa=+1 partner absent
    rep = verify_so4(states, cfg.zalpha)
    assert not rep["blocks"]
    assert rep["incomplete"]
    jl = verify_johnson_lippmann(states, cfg.zalpha)
    assert jl["states"]["n=2,kappa=-1"].get("partner_missing")

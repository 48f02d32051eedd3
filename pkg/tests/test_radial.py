"""Bound-state solver against the closed-form energies."""

import numpy as np
import pytest

from diracsym.radial import (
    RadialConfig,
    RadialSolveError,
    RadialState,
    solve_radial,
    sommerfeld_energy,
    valid_state_labels,
)

ZA = 1.0 / 137.035999084


def test_ground_state_closed_form():
    # n = 1, kappa = -1 reduces to sqrt(1 - za^2)
    e = sommerfeld_energy(1, -1, ZA)
    assert abs(e - np.sqrt(1 - ZA ** 2)) < 1e-15
    assert abs(e - 0.99997338) < 5e-9


def test_closed_form_degeneracy_in_kappa_magnitude():
    assert sommerfeld_energy(2, -1, ZA) == sommerfeld_energy(2, 1, ZA)
    assert sommerfeld_energy(3, -2, ZA) == sommerfeld_energy(3, 2, ZA)


def test_closed_form_domain_errors():
    with pytest.raises(ValueError):
        sommerfeld_energy(1, -1, 1.0)
    with pytest.raises(ValueError):
        sommerfeld_energy(1, -1, 1.5)
    with pytest.raises(ValueError):
        sommerfeld_energy(1, 0, ZA)
    with pytest.raises(ValueError):
        sommerfeld_energy(1, 1, ZA)   # no n=1 state for kappa=+1
    with pytest.raises(ValueError):
        sommerfeld_energy(1, -2, ZA)


def test_config_validation():
    with pytest.raises(ValueError):
        RadialConfig(zalpha=1.0)
    with pytest.raises(ValueError):
        RadialConfig(mass=0.0)


def test_valid_state_labels():
    labels = valid_state_labels(3, range(-2, 3))
    assert (1, -1) in labels and (1, 1) not in labels
    assert (2, 1) in labels and (2, 2) not in labels
    assert (3, 2) in labels
    assert len(labels) == 8


def test_no_labels_rejected():
    with pytest.raises(ValueError):
        solve_radial(1, [0])


def test_solver_matches_closed_form(radial_states, radial_cfg):
    for s in radial_states:
        ref = sommerfeld_energy(s.n, s.kappa, radial_cfg.zalpha)
        assert abs(s.energy - ref) / ref <= 1e-8, (s.n, s.kappa)


def test_solved_degeneracy(radial_states):
    by = {(s.n, s.kappa): s.energy for s in radial_states}
    for (n, k) in ((2, 1), (3, 1), (3, 2)):
        assert abs(by[(n, -k)] - by[(n, k)]) / by[(n, k)] <= 1e-8


def test_energies_increase_with_n(radial_states):
    by_kappa = {}
    for s in radial_states:
        by_kappa.setdefault(s.kappa, []).append((s.n, s.energy))
    for kappa, pairs in by_kappa.items():
        pairs.sort()
        energies = [e for _, e in pairs]
        assert energies == sorted(energies)
        assert len(set(energies)) == len(energies)


def test_states_normalized_and_bound(radial_states):
    for s in radial_states:
        assert s.norm_defect() < 1e-10
        assert 0.0 < s.energy < 1.0
        assert s.match_defect < 1e-8


def test_small_component_scale(radial_states):
    # the lower radial component carries a relative weight of order za
    from diracsym.radial import _quad
    for s in radial_states:
        wg = _quad(s.G * s.G, s.r, s.du)
        assert wg < (5 * ZA) ** 2
        assert wg > 0.0


def test_solver_small_run_is_fast_and_consistent():
    cfg = RadialConfig(n_steps=1500, n_grid=2048)
    states = solve_radial(1, [-1], cfg)
    assert len(states) == 1
    ref = sommerfeld_energy(1, -1, cfg.zalpha)
    assert abs(states[0].energy - ref) / ref < 1e-7

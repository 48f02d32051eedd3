"""Grid-level operator checks: deferral correctness, eigen-oracles, and
the constants-of-motion residuals."""

import numpy as np
import pytest

from diracsym.grid import (
    DeferredField,
    Grid,
    GridConfig,
    GridSpinor,
    make_test_states,
)
from diracsym.observables import (
    anticommutator_residual,
    build_observables,
    commutator_residual,
    constants_of_motion_report,
    negative_control_residual,
    refinement_study,
    spin_orbit_identity_residual,
)

CFG = GridConfig(n_states=2)
OPS = build_observables(CFG)
GRID = OPS["grid"]
STATES = make_test_states(GRID, count=2)


def test_too_coarse_grid_rejected():
    with pytest.raises(ValueError):
        GridConfig(n=4)


def test_bad_coupling_rejected():
    with pytest.raises(ValueError):
        GridConfig(zalpha=1.5)
    with pytest.raises(ValueError):
        GridConfig(zalpha=0.0)


def test_states_normalized_and_bandlimited():
    for psi in STATES:
        sp = GridSpinor(GRID, psi)
        assert abs(sp.norm() - 1.0) < 1e-12
        assert sp.fft_roundtrip_error() < 1e-14


def test_states_avoid_origin_and_faces():
    psi = STATES[0]
    amax = np.abs(psi).max()
    c = GRID.n // 2
    near_origin = np.abs(psi[:, c - 1:c + 1, c - 1:c + 1, c - 1:c + 1]).max()
    assert near_origin / amax < 1e-6
    face = max(np.abs(psi[:, 0]).max(), np.abs(psi[:, :, 0]).max(),
               np.abs(psi[:, :, :, 0]).max())
    assert face / amax < 1e-3


def test_spinor_shape_validation():
    with pytest.raises(ValueError):
        GridSpinor(GRID, np.zeros((4, 8, 8, 8), complex))


def test_deferred_momentum_coordinate_rule():
    # p_b (x_a g) must equal x_a p_b g - i delta_ab g
    psi = STATES[0]
    df = DeferredField.plain(GRID, psi)
    lhs = df.coordinate(0).momentum(0)
    rhs = df.momentum(0).coordinate(0) - df.scale(1j)
    assert GRID.norm(lhs.materialize() - rhs.materialize()) < 1e-12


def test_deferred_matches_direct_when_states_avoid_faces():
    # materializing before or after a position multiply agrees for fields
    # that vanish at the box edge
    psi = STATES[0]
    df = DeferredField.plain(GRID, psi)
    deferred = df.momentum(1).coordinate(0).materialize()
    direct = GRID.x[0] * df.momentum(1).materialize()
    assert GRID.norm(deferred - direct) < 1e-12


def test_orbital_angular_momentum_eigenstate():
    # (x1 + i x2) * gaussian is an m = 1 eigenstate of L3
    sigma = 3.0 * GRID.spacing
    env = np.exp(-GRID.r ** 2 / (2 * sigma ** 2))
    blob = (GRID.x[0] + 1j * GRID.x[1]) * env
    psi = np.stack([blob, 0 * blob, 0 * blob, 0 * blob])
    psi /= GRID.norm(psi)
    df = DeferredField.plain(GRID, psi)
    j3 = OPS["J3"](df).materialize()
    # J3 = L3 + s3: eigenvalue 1 + 1/2 on the first component
    assert GRID.norm(j3 - 1.5 * psi) < 1e-9


@pytest.mark.parametrize("upper,expect", [(True, 1.0), (False, -1.0)])
def test_kappa_operator_eigenvalues(upper, expect):
    # s-type spinor (kappa = -1) has K eigenvalue +1; applying the
    # direction-cosine flip gives the kappa = +1 partner with eigenvalue -1
    sigma = 3.0 * GRID.spacing
    env = np.exp(-GRID.r ** 2 / (2 * sigma ** 2))
    zero = np.zeros_like(env)
    if upper:
        psi = np.stack([env, zero, zero, zero]).astype(complex)
    else:
        psi = np.stack([GRID.xhat[2] * env,
                        (GRID.xhat[0] + 1j * GRID.xhat[1]) * env,
                        zero, zero])
    psi /= GRID.norm(psi)
    df = DeferredField.plain(GRID, psi)
    kpsi = OPS["K"](df).materialize()
    assert GRID.norm(kpsi - expect * psi) < 1e-8


def test_commutator_residuals_for_j_and_k():
    for psi in STATES:
        for name in ("J1", "J2", "J3", "K"):
            r = commutator_residual(OPS[name], OPS["H"], psi, GRID, q_scale=1.0)
            assert r <= 1e-6, (name, r)


def test_spin_orbit_identity():
    for psi in STATES:
        assert spin_orbit_identity_residual(OPS, psi) <= 1e-10


def test_kd_anticommutator():
    for psi in STATES:
        r = anticommutator_residual(OPS["K"], OPS["D"], psi, GRID)
        assert r <= 1e-8


def test_negative_control_is_large():
    for i, psi in enumerate(STATES):
        assert negative_control_residual(OPS, psi, seed=i) >= 1e-2


def test_full_report_keys():
    rep = constants_of_motion_report(CFG, states=STATES)
    assert rep["n_states"] == 2
    assert rep["negative_control"] >= 1e-2
    assert max(rep[k] for k in ("J1", "J2", "J3", "K")) <= 1e-6


def test_refinement_monotone():
    rs = refinement_study(GridConfig(), ns=(16, 32, 48), n_states=1)
    assert rs[16] > rs[32] > rs[48] or rs[32] < 1e-8
    assert rs[16] > 10 * rs[32]

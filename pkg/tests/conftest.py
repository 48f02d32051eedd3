import pytest

from diracsym.grid import Grid, GridConfig
from diracsym.radial import RadialConfig, solve_radial


@pytest.fixture(scope="session")
def radial_cfg():
    return RadialConfig()


@pytest.fixture(scope="session")
def radial_states(radial_cfg):
    """The full n <= 3, |kappa| <= 2 bound-state set (solved once)."""
    return solve_radial(3, range(-2, 3), radial_cfg)


@pytest.fixture(scope="session")
def grid32():
    return Grid(GridConfig())

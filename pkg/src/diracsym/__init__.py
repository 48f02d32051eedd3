"""diracsym: exact and spectral verification of the symmetry algebras of
the Dirac equation in an external Coulomb field.

The package has two arithmetic regimes:

* exact -- matrix/antilinear operator algebra over Q(i, sqrt2)
  (`exact`, `gammas`, `so8`, `lorentz`, `evolution`);
* numeric -- periodic-grid spectral operators, a radial bound-state
  solver, and the nonlocal momentum-space layer (`grid`, `observables`,
  `radial`, `fw`).

`claims` ties both into a registry of named checks with deterministic
machine-readable reports; `cli` exposes the `diracsym` command.
"""

from .exact import (
    ExactScalar,
    Matrix4,
    RealLinearOp,
    adjoint,
    anticommutator,
    commutator,
    compose,
    is_anti_hermitian,
    real_span_dim,
)
from .gammas import GammaSet, build_gamma_set

__version__ = "0.1.0"

__all__ = [
    "ExactScalar",
    "Matrix4",
    "RealLinearOp",
    "adjoint",
    "anticommutator",
    "commutator",
    "compose",
    "is_anti_hermitian",
    "real_span_dim",
    "GammaSet",
    "build_gamma_set",
    "__version__",
]

"""abflux: spinor wave packets scattering on a current-carrying wire.

A slow neutral particle with a magnetic moment moves in the plane
perpendicular to a long straight wire.  The Zeeman splitting defines two
local spin channels; eliminating the fast spin leaves an effective gauge
potential carrying half a flux unit on the wire axis.  This package
integrates both the exact coupled two-channel equations and the adiabatic
single-channel equations on an annular polar grid with sixth-order
summation-by-parts operators and weak (penalty) wall conditions, and
measures the forward interference node that the effective flux produces.

Subpackages select a compiled stencil core at import time when available
and fall back to a NumPy implementation otherwise (see abflux.kernels).
"""

__version__ = "0.1.0"

from .units import PhysicalParams, DimensionlessParams, potential_height, derive_dimensionless
from .grid import Grid
from .hamiltonian import SpinorField, field_profile, init_gaussian, project_spin_basis
from .observables import (
    SnapshotRecord,
    density,
    spin_density,
    angular_profile,
    forward_visibility,
    adiabaticity_distance,
)

__all__ = [
    "PhysicalParams",
    "DimensionlessParams",
    "potential_height",
    "derive_dimensionless",
    "Grid",
    "SpinorField",
    "field_profile",
    "init_gaussian",
    "project_spin_basis",
    "SnapshotRecord",
    "density",
    "spin_density",
    "angular_profile",
    "forward_visibility",
    "adiabaticity_distance",
    "__version__",
]

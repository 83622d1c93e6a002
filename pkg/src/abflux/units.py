"""Conversion between laboratory (SI) parameters and solver units.

All solver quantities are expressed in wire radii R and in the rescaled
time s = hbar*t / (2*m*R^2).  In these units the free kinetic operator is
-(d^2/dx^2 + d^2/dy^2) with dispersion omega = k^2, so a packet built with
carrier k0 moves at dimensionless group speed 2*k0.

The magnetic interaction enters through a single dimensionless coupling

    kappa = 2*m*R^2*V0 / hbar^2,    V0 = |mu| * mu0 * I_w / (4*pi*R),

where V0 is the Zeeman barrier height at the wire surface.  The paper-scale
experiment (10 mA through a 10 um wire) gives kappa ~ 29.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

# Laboratory defaults: neutron data and SI constants.
NEUTRON_MASS_KG = 1.67e-27
NEUTRON_MOMENT_J_PER_T = -9.65e-27
VACUUM_PERMEABILITY = 4.0e-7 * math.pi
HBAR_J_S = 1.054571817e-34

# intensity FWHM = 2*sqrt(2 ln 2) * sigma for a Gaussian |phi|^2
FWHM_TO_SIGMA = 1.0 / (2.0 * math.sqrt(2.0 * math.log(2.0)))


@dataclass(frozen=True)
class PhysicalParams:
    """SI-unit description of one scattering experiment.

    packet_width is the intensity FWHM of the incoming Gaussian.
    launch_distance is the initial distance of the packet centre from the
    wire axis.
    """

    wire_current: float = 0.010            # A
    wire_radius: float = 1.0e-5            # m
    incoming_velocity: float = 0.02        # m/s, in the plane normal to the wire
    neutron_mass: float = NEUTRON_MASS_KG  # kg
    neutron_moment: float = NEUTRON_MOMENT_J_PER_T  # J/T, signed
    vacuum_permeability: float = VACUUM_PERMEABILITY  # T m / A
    hbar: float = HBAR_J_S                 # J s
    packet_width: float = 2.0e-5           # m, intensity FWHM
    launch_distance: float = 1.5e-4        # m

    def validate(self):
        problems = []
        if not self.wire_radius > 0:
            problems.append("wire_radius must be > 0")
        if not self.incoming_velocity > 0:
            problems.append("incoming_velocity must be > 0")
        if not self.neutron_mass > 0:
            problems.append("neutron_mass must be > 0")
        if not self.packet_width > 0:
            problems.append("packet_width must be > 0")
        if not self.hbar > 0:
            problems.append("hbar must be > 0")
        if not self.launch_distance > self.wire_radius + self.packet_width:
            problems.append(
                "launch_distance must exceed wire_radius + packet_width "
                "(packet must start clear of the wall)"
            )
        if problems:
            raise ParameterError("; ".join(problems))
        return self


@dataclass(frozen=True)
class DimensionlessParams:
    """Everything the solver consumes, in wire-radius units."""

    kappa: float
    alpha: float          # 1/2 with the effective flux, 0 for the control run
    k0: float             # carrier wavenumber
    sigma: float          # Gaussian amplitude sigma (phi ~ exp(-x^2/(4 sigma^2)))
    x0: float             # launch x-coordinate, negative
    r_max: float
    t_final: float

    def validate(self):
        problems = []
        if self.kappa < 0:
            problems.append("kappa must be >= 0")
        if self.alpha not in (0.0, 0.5):
            problems.append("alpha must be 0 or 0.5")
        if not self.k0 >= 0:
            problems.append("k0 must be >= 0")
        if not self.sigma > 0:
            problems.append("sigma must be > 0")
        if not self.x0 < 0:
            problems.append("x0 must be negative")
        if not self.r_max > abs(self.x0) + 3.0 * self.sigma:
            problems.append("r_max must exceed |x0| + several sigma")
        if not self.t_final >= 0:
            problems.append("t_final must be >= 0")
        if problems:
            raise ParameterError("; ".join(problems))
        return self


def potential_height(p: PhysicalParams) -> float:
    """Zeeman barrier height V0 = |mu| mu0 I_w / (4 pi R), in joules."""
    if not p.wire_radius > 0:
        raise ParameterError("wire_radius must be > 0")
    return abs(p.neutron_moment) * p.vacuum_permeability * p.wire_current / (4.0 * math.pi * p.wire_radius)


def derive_dimensionless(
    p: PhysicalParams,
    alpha: float,
    r_max: float = 40.0,
    t_final: float | None = None,
    exit_distance: float = 15.0,
) -> DimensionlessParams:
    """Map SI parameters to solver units.

    kappa = 2 m R^2 V0 / hbar^2 and k0 = m v R / hbar, so the dimensionless
    group speed 2*k0 equals v * 2 m R / hbar, i.e. exactly v in lab units.
    When t_final is None it is set so that the packet centre would travel
    ballistically from x0 to +exit_distance.
    """
    p.validate()
    v0 = potential_height(p)
    kappa = 2.0 * p.neutron_mass * p.wire_radius**2 * v0 / p.hbar**2
    k0 = p.neutron_mass * p.incoming_velocity * p.wire_radius / p.hbar
    sigma = (p.packet_width / p.wire_radius) * FWHM_TO_SIGMA
    x0 = -p.launch_distance / p.wire_radius
    if t_final is None:
        t_final = (abs(x0) + exit_distance) / (2.0 * k0)
    return DimensionlessParams(
        kappa=kappa, alpha=alpha, k0=k0, sigma=sigma, x0=x0,
        r_max=r_max, t_final=t_final,
    ).validate()


def group_speed_si(dp: DimensionlessParams, p: PhysicalParams) -> float:
    """Back-convert the dimensionless group speed 2*k0 to m/s (round-trip check)."""
    return 2.0 * dp.k0 * p.hbar / (2.0 * p.neutron_mass * p.wire_radius**2) * p.wire_radius

"""Closed-form kinematics and residual stress in the grown spherical shell.

The shell occupies r0 <= r <= r1 around a rigid sphere of radius r0.  New
material is deposited unstretched at r0 and pushed outward, so a particle's
current radius follows from incompressibility alone, and the stress field
is known in closed form once the reduced energy is fixed.  All operations
here are pure functions of a static geometry; time never enters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .strain_energy import ReducedEnergy

__all__ = [
    "ShellGeometry",
    "FieldSample",
    "radius_of_particle",
    "stretches",
    "velocity",
    "radial_stress",
    "hoop_stress",
    "stress_profile",
    "equilibrium_residual",
    "outer_radius_rate",
]


@dataclass(frozen=True)
class ShellGeometry:
    """Concentric spherical shell, r1 >= r0 > 0."""

    r0: float
    r1: float

    def __post_init__(self):
        if not self.r0 > 0.0:
            raise ValueError("inner radius r0 must be positive")
        if self.r1 < self.r0:
            raise ValueError("outer radius r1 must not be below r0")

    @property
    def nu(self) -> float:
        """Radius ratio r1/r0 (>= 1)."""
        return self.r1 / self.r0


@dataclass(frozen=True)
class FieldSample:
    """Pointwise state at radius r.

    Mechanical fields are always populated; the velocity v needs an
    accretion speed and the transport fields (h, mu) need the chemistry,
    so those default to None until a caller supplies them.
    """

    r: float
    lam_r: float
    lam_theta: float
    sigma_r: float
    sigma_theta: float
    v: float | None = None
    h: float | None = None
    mu: float | None = None


def radius_of_particle(Z: float, Z0: float, r0: float) -> float:
    """Current radius of the particle deposited when the growth front was at Z.

    r = (r0**3 + 3 r0**2 (Z - Z0))**(1/3); Z is the cumulative material
    coordinate and Z0 marks the particle currently at the inner surface.
    """
    if not r0 > 0.0:
        raise ValueError("r0 must be positive")
    if Z < Z0:
        raise ValueError("Z < Z0: particle is not in the body")
    return float(np.cbrt(r0**3 + 3.0 * r0**2 * (Z - Z0)))


def stretches(r: float, r0: float) -> tuple[float, float]:
    """Principal stretches (lam_r, lam_theta) at radius r.

    lam_theta = r/r0 and lam_r = (r0/r)**2, so lam_r * lam_theta**2 = 1.
    """
    if not r0 > 0.0:
        raise ValueError("r0 must be positive")
    if r < r0:
        raise ValueError("r < r0: point is inside the bead")
    return (r0 / r) ** 2, r / r0


def velocity(r: float, V0: float, r0: float) -> float:
    """Radial particle velocity v = V0 (r0/r)**2.

    V0 is the accretion speed at the inner surface; incompressibility makes
    r**2 v constant through the shell.
    """
    if not r0 > 0.0:
        raise ValueError("r0 must be positive")
    if r < r0:
        raise ValueError("r < r0: point is inside the bead")
    return V0 * (r0 / r) ** 2


def radial_stress(r: float, geom: ShellGeometry, energy: ReducedEnergy) -> float:
    """Radial Cauchy stress sigma_r(r) = w(r/r0) - w(r1/r0).

    Nonpositive throughout, zero at the traction-free outer surface and
    -w(nu) at the bead.
    """
    if r < geom.r0 or r > geom.r1:
        raise ValueError("r outside the shell [r0, r1]")
    return float(energy.w(r / geom.r0)) - float(energy.w(geom.r1 / geom.r0))


def hoop_stress(r: float, geom: ShellGeometry, energy: ReducedEnergy) -> float:
    """Circumferential Cauchy stress sigma_theta(r).

    sigma_theta = sigma_r + (1/2)(r/r0) dw(r/r0).  The state is hydrostatic
    at the bead and carries hoop tension (1/2) nu dw(nu) at the outer
    surface when nu > 1.
    """
    lam = r / geom.r0
    return radial_stress(r, geom, energy) + 0.5 * lam * float(energy.dw(lam))


def stress_profile(
    geom: ShellGeometry,
    energy: ReducedEnergy,
    n: int,
    V0: float | None = None,
) -> list[FieldSample]:
    """Sample the shell uniformly in r with n points.

    Velocity is filled only when V0 is given; transport fields stay None.
    """
    if n < 2:
        raise ValueError("need at least 2 sample points")
    r = np.linspace(geom.r0, geom.r1, n)
    w_nu = float(energy.w(geom.r1 / geom.r0))
    samples = []
    for ri in r:
        lam = ri / geom.r0
        sig_r = float(energy.w(lam)) - w_nu
        sig_t = sig_r + 0.5 * lam * float(energy.dw(lam))
        samples.append(
            FieldSample(
                r=float(ri),
                lam_r=(geom.r0 / ri) ** 2,
                lam_theta=lam,
                sigma_r=sig_r,
                sigma_theta=sig_t,
                v=None if V0 is None else V0 * (geom.r0 / ri) ** 2,
            )
        )
    return samples


def equilibrium_residual(geom: ShellGeometry, energy: ReducedEnergy, n: int) -> float:
    """Discrete check of the radial equilibrium equation.

    Returns max over interior grid points of
    |centered-difference(sigma_r)/dr - dw(r/r0)/r0| on a uniform n-point
    grid.  The closed-form stress satisfies the equation exactly, so the
    residual is pure truncation error and shrinks as O(dr**2).
    """
    if n < 3:
        raise ValueError("need at least 3 grid points")
    if geom.r1 == geom.r0:
        return 0.0
    r = np.linspace(geom.r0, geom.r1, n)
    dr = (geom.r1 - geom.r0) / (n - 1)
    w_nu = float(energy.w(geom.r1 / geom.r0))
    sig_r = np.asarray(energy.w(r / geom.r0), dtype=float) - w_nu
    dsig = (sig_r[2:] - sig_r[:-2]) / (2.0 * dr)
    target = np.asarray(energy.dw(r[1:-1] / geom.r0), dtype=float) / geom.r0
    return float(np.max(np.abs(dsig - target)))


def outer_radius_rate(geom: ShellGeometry, V0: float, V1: float) -> float:
    """Growth rate of the outer radius from volume conservation.

    r1**2 rdot1 = r0**2 (V0 + V1); treadmilling (V1 = -V0) gives zero.
    """
    return geom.r0**2 * (V0 + V1) / geom.r1**2

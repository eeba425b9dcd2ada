"""Steady radial transport of free particles around the growing shell.

In steady state the radial flux h(r) satisfies (r**2 h)' = 0 on each side
of the outer surface, with a jump there set by the ablation speed, and the
chemical potential follows from Fick's law h = -M mu'.  Both fields are
closed-form in (V0, V1, mu0, mu_inf, r0, r1); profiles are stored as the
parameter bundle and evaluated on demand, so there is no discretization
error to track.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "TransportParams",
    "SteadyProfiles",
    "flux",
    "chemical_potential",
    "interface_residuals",
]


@dataclass(frozen=True)
class TransportParams:
    """Transport constants: mobilities inside/outside the solid, referential
    density, and the remote chemical potential."""

    M_inner: float
    M_outer: float
    rhoR: float
    mu_inf: float

    def __post_init__(self):
        if not self.M_inner > 0.0:
            raise ValueError("M_inner must be positive")
        if not self.M_outer > 0.0:
            raise ValueError("M_outer must be positive")
        if not self.rhoR > 0.0:
            raise ValueError("rhoR must be positive")


def flux(
    r: float,
    V0: float,
    V1: float,
    r0: float,
    r1: float,
    rhoR: float,
    side: str | None = None,
) -> float:
    """Steady free-particle flux h(r).

    h(r) = -rhoR V0 (r0/r)**2 inside the solid and
    h(r) = -rhoR (V0+V1) (r0/r)**2 outside it.  The flux jumps at r1, so
    evaluating exactly there requires side="below" or side="above".

    Parameters
    ----------
    r : float
        Radius, r >= r0.
    V0, V1 : float
        Accretion and ablation speeds.
    r0, r1 : float
        Inner and outer surface radii.
    rhoR : float
        Referential density.
    side : str, optional
        One-sided limit selector at r = r1; ignored elsewhere.
    """
    if r < r0:
        raise ValueError("r < r0: no flux defined inside the bead")
    if r == r1:
        if side == "below":
            inside = True
        elif side == "above":
            inside = False
        else:
            raise ValueError('flux jumps at r1; pass side="below" or side="above"')
    else:
        inside = r < r1
    rate = V0 if inside else V0 + V1
    value = -rhoR * rate * (r0 / r) ** 2
    # A treadmilling state has V0 + V1 = 0 exactly; avoid returning -0.0.
    return 0.0 if value == 0.0 else value


@dataclass(frozen=True)
class SteadyProfiles:
    """Closed-form steady flux and chemical-potential profiles.

    Parameterized by the interface speeds, the inner-surface potential mu0,
    the geometry, and the transport constants.  mu is continuous at r1 for
    any consistent state; h jumps there by -(r0/r1)**2 rhoR V1.
    """

    V0: float
    V1: float
    mu0: float
    r0: float
    r1: float
    transport: TransportParams

    def __post_init__(self):
        if not self.r0 > 0.0:
            raise ValueError("r0 must be positive")
        if self.r1 < self.r0:
            raise ValueError("r1 must not be below r0")

    def h(self, r: float, side: str | None = None) -> float:
        return flux(r, self.V0, self.V1, self.r0, self.r1, self.transport.rhoR, side)

    def mu(self, r: float) -> float:
        return chemical_potential(r, self)


def chemical_potential(r: float, profiles: SteadyProfiles) -> float:
    """Chemical potential mu(r) of the steady profiles.

    mu(r) = mu0 + (rhoR r0 V0 / M_inner)(1 - r0/r)      for r0 <= r < r1,
    mu(r) = mu_inf - (rhoR (V0+V1) / M_outer)(r0**2/r)  for r >= r1.

    At r = r1 the outer expression is returned; for a consistent state it
    coincides with the inner limit.
    """
    t = profiles.transport
    if r < profiles.r0:
        raise ValueError("r < r0: no potential defined inside the bead")
    if r < profiles.r1:
        return profiles.mu0 + (t.rhoR * profiles.r0 * profiles.V0 / t.M_inner) * (
            1.0 - profiles.r0 / r
        )
    return t.mu_inf - (t.rhoR * (profiles.V0 + profiles.V1) / t.M_outer) * (
        profiles.r0**2 / r
    )


def interface_residuals(state, params: TransportParams, r0: float) -> tuple[float, float]:
    """Mass-balance residuals linking interface speeds to the potentials.

    res0 = rhoR V0 - M_inner (mu1 - mu0)/(r1 - r0) * (r1/r0)
    res1 = rhoR (V0 + V1) - M_outer (mu_inf - mu1) * r1/r0**2

    Both vanish for any consistent steady state.  ``state`` needs attributes
    V0, V1, mu0, mu1 and r1 (a solved treadmilling state qualifies).
    """
    r1 = state.r1
    if r1 <= r0:
        raise ValueError("interface residuals need r1 > r0")
    res0 = params.rhoR * state.V0 - params.M_inner * (state.mu1 - state.mu0) / (
        r1 - r0
    ) * (r1 / r0)
    res1 = params.rhoR * (state.V0 + state.V1) - params.M_outer * (
        params.mu_inf - state.mu1
    ) * r1 / r0**2
    return res0, res1

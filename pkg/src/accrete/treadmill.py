"""Solver for the steady treadmilling state of the accreting shell.

The steady state couples three effects: linear accretion/ablation kinetics
at the two surfaces, the elastic energy stored by growth, and steady
diffusion of free particles to the inner surface.  Eliminating everything
else reduces the problem to one scalar equation for the radius ratio
nu = r1/r0,

    g(eta, nu) = h(nu),

where g is strictly decreasing in nu, h is strictly increasing and
unbounded, and eta is the bead radius measured in the diffusion length
ellStar.  A root with g(1) - h(1) = Vstar - Vstarstar > 0 therefore exists
and is unique exactly when Vstar > 0 and Vstar > Vstarstar.

The root finder never needs derivatives: it brackets by doubling (nu - 1)
and then runs a secant iteration safeguarded by bisection until the
bracket collapses to machine resolution.  Everything downstream of nu is
closed-form back-substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .strain_energy import ReducedEnergy

__all__ = [
    "ModelParams",
    "Scales",
    "TreadmillState",
    "Solvability",
    "NoTreadmillingState",
    "NumericFailure",
    "compute_scales",
    "solvable",
    "g",
    "h",
    "solve",
    "grid_scan_oracle",
    "small_bead_asymptote",
    "small_bead_quadratic",
    "large_bead_asymptote",
]

_LAM_CAP = 1e9
_FIRST_STEP = 1e-3


class NoTreadmillingState(Exception):
    """No steady treadmilling state exists for the given parameters."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NumericFailure(RuntimeError):
    """Root bracketing or iteration failed; indicates a malformed energy."""


@dataclass(frozen=True)
class ModelParams:
    """All physical constants of the model.

    Parameters
    ----------
    energy : ReducedEnergy
        Reduced strain energy of the solid.
    b0, b1 : float
        Kinetic moduli of the inner and outer surfaces, > 0.
    muR0, muR1 : float
        Referential chemical potentials assigned to bound material at the
        inner and outer surfaces.
    mu_inf : float
        Remote chemical potential of the free particles.
    rhoR : float
        Referential density, > 0.
    M : float
        Particle mobility inside the solid, > 0.
    r0 : float
        Bead radius, > 0.
    """

    energy: ReducedEnergy
    b0: float
    b1: float
    muR0: float
    muR1: float
    mu_inf: float
    rhoR: float
    M: float
    r0: float

    def __post_init__(self):
        for name in ("b0", "b1", "rhoR", "M", "r0"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class Scales:
    """Characteristic scales derived from ModelParams.

    Vstar and Vstarstar are velocity scales, ellStar a diffusion length,
    muStar the kinetics-weighted mean referential potential, and
    eta = r0/ellStar the nondimensional bead radius.
    """

    Vstar: float
    Vstarstar: float
    ellStar: float
    muStar: float
    eta: float


@dataclass(frozen=True)
class TreadmillState:
    """The full steady solution.

    V1 = -V0 and mu1 = mu_inf hold in every treadmilling state; f0 and f1
    are the driving forces b0 V0 and b1 V1.
    """

    nu: float
    r1: float
    d: float
    V0: float
    V1: float
    mu0: float
    mu1: float
    f0: float
    f1: float


@dataclass(frozen=True)
class Solvability:
    """Decision of the existence test, with the violated inequality if any."""

    ok: bool
    reason: str | None = None


def compute_scales(params: ModelParams) -> Scales:
    """Characteristic velocity, length and potential scales."""
    bsum = params.b0 + params.b1
    Vstar = (params.muR1 - params.muR0) * params.rhoR / bsum
    Vstarstar = (params.muR1 - params.mu_inf) * params.rhoR / params.b1
    ellStar = bsum * params.M / params.rhoR**2
    muStar = (params.b0 * params.muR1 + params.b1 * params.muR0) / bsum
    return Scales(
        Vstar=Vstar,
        Vstarstar=Vstarstar,
        ellStar=ellStar,
        muStar=muStar,
        eta=params.r0 / ellStar,
    )


def solvable(params: ModelParams) -> Solvability:
    """Existence test for the treadmilling state.

    A state exists iff Vstar > 0 and Vstar > Vstarstar; in terms of the
    chemistry these are muR1 > muR0 and mu_inf > muStar.
    """
    s = compute_scales(params)
    if not s.Vstar > 0.0:
        return Solvability(False, "Vstar <= 0 (requires muR1 > muR0)")
    if not s.Vstar > s.Vstarstar:
        return Solvability(False, "Vstar <= Vstarstar (requires mu_inf > muStar)")
    return Solvability(True)


def g(eta: float, lam: float, Vstar: float):
    """Supply-side curve g = Vstar / (1 + eta (1 - 1/lam)).

    Strictly decreasing in lam for eta > 0.  The factor is evaluated as
    (lam - 1)/lam, which is exact near lam = 1 where 1 - 1/lam cancels.
    """
    if np.any(np.asarray(lam) < 1.0):
        raise ValueError("lam must be >= 1")
    if eta < 0.0:
        raise ValueError("eta must be >= 0")
    return Vstar / (1.0 + eta * (lam - 1.0) / lam)


def h(lam: float, Vstarstar: float, b1: float, energy: ReducedEnergy):
    """Demand-side curve h = Vstarstar + w(lam)/b1; increasing, unbounded."""
    if np.any(np.asarray(lam) < 1.0):
        raise ValueError("lam must be >= 1")
    return Vstarstar + energy.w(lam) / b1


def _find_root(F, f_at_1: float) -> float:
    """Root of a strictly decreasing F on (1, inf) with F(1) = f_at_1 > 0.

    Brackets by doubling (lam - 1) from _FIRST_STEP, then iterates a
    secant step safeguarded by bisection.  The loop runs until the bracket
    collapses to adjacent floats and returns the endpoint with the smaller
    |F|; for a monotone F that endpoint is the best representable root, so
    back-substituted residuals sit at rounding level.
    """
    a, fa = 1.0, f_at_1
    u = _FIRST_STEP
    while True:
        b = 1.0 + u
        if b > _LAM_CAP:
            raise NumericFailure(
                f"no sign change below lam = {_LAM_CAP:g}; energy growth assumption violated?"
            )
        fb = F(b)
        if fb <= 0.0:
            break
        a, fa = b, fb
        u *= 2.0
    if fb == 0.0:
        return b

    side = 0
    stall = 0
    for _ in range(300):
        mid = 0.5 * (a + b)
        if not (a < mid < b):
            break
        x = b - fb * (b - a) / (fb - fa)
        if stall >= 2 or not (a < x < b):
            x = mid
        fx = F(x)
        if fx > 0.0:
            stall = stall + 1 if side == -1 else 1
            side = -1
            a, fa = x, fx
        elif fx < 0.0:
            stall = stall + 1 if side == 1 else 1
            side = 1
            b, fb = x, fx
        else:
            return x
        if x == mid:
            stall = 0
    if (b - a) > 1e-9 * b:
        raise NumericFailure("root iteration failed to converge")
    return a if abs(fa) <= abs(fb) else b


def solve(params: ModelParams) -> TreadmillState:
    """Solve the treadmilling system.

    Raises NoTreadmillingState when the existence conditions fail and
    NumericFailure if bracket expansion passes lam = 1e9 (unreachable for
    energies that grow without bound).

    The equation is solved in the nondimensional variables
    (nu, V/Vstar, w/(b1 Vstar)) so conditioning is uniform across many
    decades of eta; outputs are dimensional.
    """
    dec = solvable(params)
    if not dec.ok:
        raise NoTreadmillingState(dec.reason)
    s = compute_scales(params)
    energy = params.energy
    eta = s.eta
    vss = s.Vstarstar / s.Vstar
    wscale = params.b1 * s.Vstar

    def F(lam: float) -> float:
        return 1.0 / (1.0 + eta * (lam - 1.0) / lam) - vss - energy.w(lam) / wscale

    nu = _find_root(F, 1.0 - vss)

    V0 = s.Vstarstar + float(energy.w(nu)) / params.b1
    mu0 = params.mu_inf - (params.b0 + params.b1) * (s.Vstar - V0) / params.rhoR
    return TreadmillState(
        nu=nu,
        r1=nu * params.r0,
        d=(nu - 1.0) * params.r0,
        V0=V0,
        V1=-V0,
        mu0=mu0,
        mu1=params.mu_inf,
        f0=params.b0 * V0,
        f1=params.b1 * (-V0),
    )


def grid_scan_oracle(
    params: ModelParams, lam_max: float, n: int
) -> list[tuple[float, float]]:
    """Independent uniqueness check: scan g - h for sign changes.

    Evaluates F = g - h on n points log-spaced in (lam - 1) up to
    lam_max and returns every interval whose endpoints straddle zero.
    Valid parameters must yield exactly one bracket, and it must contain
    the solver's nu; anything else signals an inconsistency.
    """
    dec = solvable(params)
    if not dec.ok:
        raise NoTreadmillingState(dec.reason)
    if not lam_max > 1.0:
        raise ValueError("lam_max must exceed 1")
    if n < 100:
        raise ValueError("need at least 100 scan points")
    s = compute_scales(params)
    u = np.geomspace((lam_max - 1.0) * 1e-13, lam_max - 1.0, n)
    lam = 1.0 + u
    F = np.asarray(
        g(s.eta, lam, s.Vstar) - h(lam, s.Vstarstar, params.b1, params.energy),
        dtype=float,
    )
    pos = F > 0.0
    flips = np.nonzero(pos[:-1] != pos[1:])[0]
    return [(float(lam[i]), float(lam[i + 1])) for i in flips]


def _root_of_w(energy: ReducedEnergy, b1: float, target: float) -> float:
    """Unique lam > 1 with w(lam)/b1 = target, for target > 0."""
    scale = b1 * target
    return _find_root(lambda lam: 1.0 - energy.w(lam) / scale, 1.0)


def small_bead_asymptote(params: ModelParams) -> tuple[float, float, float]:
    """Limiting state as eta -> 0 (stress-limited regime).

    Returns (nu_star, V0_limit, mu0_limit): nu_star is the root of
    w(nu)/b1 = Vstar - Vstarstar, the accretion speed tends to Vstar and
    the inner potential to mu_inf.
    """
    dec = solvable(params)
    if not dec.ok:
        raise NoTreadmillingState(dec.reason)
    s = compute_scales(params)
    nu_star = _root_of_w(params.energy, params.b1, s.Vstar - s.Vstarstar)
    return nu_star, s.Vstar, params.mu_inf


def small_bead_quadratic(params: ModelParams) -> float:
    """Small-thickness estimate d/r0 = sqrt(2 (mu_inf - muStar) rhoR / d2w(1)).

    Replaces w by its quadratic expansion about lam = 1, so it is accurate
    when the shell is thin.  Returns 0 at zero drive (mu_inf = muStar).
    """
    d2w1 = float(params.energy.d2w(1.0))
    if not d2w1 > 0.0:
        raise ValueError("estimate needs d2w(1) > 0")
    s = compute_scales(params)
    drive = (params.mu_inf - s.muStar) * params.rhoR
    if drive < 0.0:
        raise ValueError("estimate needs mu_inf >= muStar")
    return math.sqrt(2.0 * drive / d2w1)


def large_bead_asymptote(
    params: ModelParams, eta: float
) -> tuple[float | None, float, float]:
    """Limiting behavior as eta -> inf, branched on the sign of Vstarstar.

    Returns (d_over_r0_est, V0_est, mu0_limit).

    For Vstarstar > 0 (diffusion-limited): the thickness estimate is
    (Vstar/Vstarstar - 1)/eta and V0 tends to Vstarstar.  For
    Vstarstar < 0: nu tends to the root nu2 of w(nu2)/b1 = -Vstarstar,
    the thickness estimate is nu2 - 1 and V0 decays like
    Vstar/(1 - 1/nu2)/eta.  At exactly Vstarstar = 0 the thickness
    estimate is unavailable (None): the first branch divides by zero and
    no intermediate scaling is provided here.
    """
    dec = solvable(params)
    if not dec.ok:
        raise NoTreadmillingState(dec.reason)
    if not eta > 0.0:
        raise ValueError("eta must be positive")
    s = compute_scales(params)
    bsum = params.b0 + params.b1
    if s.Vstarstar > 0.0:
        d_est = (s.Vstar / s.Vstarstar - 1.0) / eta
        return d_est, s.Vstarstar, params.mu_inf + bsum * (s.Vstarstar - s.Vstar) / params.rhoR
    if s.Vstarstar == 0.0:
        return None, 0.0, params.mu_inf - bsum * s.Vstar / params.rhoR
    nu2 = _root_of_w(params.energy, params.b1, -s.Vstarstar)
    V0_est = s.Vstar / (1.0 - 1.0 / nu2) / eta
    return nu2 - 1.0, V0_est, params.mu_inf + params.muR0 - params.muR1

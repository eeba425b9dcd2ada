"""Reduced strain energies for isochoric equi-biaxial deformations.

An incompressible spherical shell grown outward from a sphere deforms with
principal stretches (lam**-2, lam, lam), so the full strain energy collapses
to a single-variable function w(lam).  Everything downstream (stress fields,
the treadmilling solver) only ever needs w, its first derivative dw, and its
second derivative d2w.

Energies supply the three callables analytically; finite differences are
used only as a consistency oracle in :func:`validate` and in the test suite.
A well-posed reduced energy satisfies

* w(1) = 0 and dw(1) = 0,
* dw(lam) * (lam - 1) > 0 for lam != 1,
* w(lam) > 0 for lam != 1,
* w grows without bound as lam -> inf.

Validation is advisory rather than enforced at construction so that
deliberately pathological energies can be exercised in negative tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ReducedEnergy",
    "NeoHookean",
    "eval_w",
    "eval_dw",
    "eval_d2w",
    "validate",
    "CheckResult",
    "ValidationReport",
    "modulus_scale",
]


def _check_positive_stretch(lam) -> None:
    if np.any(np.asarray(lam) <= 0.0):
        raise ValueError("stretch must be positive")


class ReducedEnergy:
    """Base interface: subclasses provide w, dw and d2w for lam > 0.

    Methods operate elementwise, so plain floats and numpy arrays both work.
    """

    def w(self, lam):
        """Energy density at stretch lam."""
        raise NotImplementedError

    def dw(self, lam):
        """First derivative of w at stretch lam."""
        raise NotImplementedError

    def d2w(self, lam):
        """Second derivative of w at stretch lam."""
        raise NotImplementedError


class NeoHookean(ReducedEnergy):
    """Neo-Hookean solid reduced to equi-biaxial stretching.

    w(lam) = (G/2) (lam**-4 + 2 lam**2 - 3)

    Parameters
    ----------
    G : float
        Shear modulus, stress units, G > 0.
    """

    def __init__(self, G: float):
        if not G > 0.0:
            raise ValueError("shear modulus G must be positive")
        self.G = float(G)

    def __repr__(self) -> str:
        return f"NeoHookean(G={self.G!r})"

    def w(self, lam):
        _check_positive_stretch(lam)
        return 0.5 * self.G * (lam**-4 + 2.0 * lam**2 - 3.0)

    def dw(self, lam):
        _check_positive_stretch(lam)
        return 2.0 * self.G * (lam - lam**-5)

    def d2w(self, lam):
        _check_positive_stretch(lam)
        return 2.0 * self.G * (1.0 + 5.0 * lam**-6)


def eval_w(energy: ReducedEnergy, lam):
    """Evaluate the energy density w(lam).

    Raises ValueError for lam <= 0.
    """
    _check_positive_stretch(lam)
    return energy.w(lam)


def eval_dw(energy: ReducedEnergy, lam):
    """Evaluate the first derivative dw(lam).

    Raises ValueError for lam <= 0.
    """
    _check_positive_stretch(lam)
    return energy.dw(lam)


def eval_d2w(energy: ReducedEnergy, lam):
    """Evaluate the second derivative d2w(lam).

    Raises ValueError for lam <= 0.
    """
    _check_positive_stretch(lam)
    return energy.d2w(lam)


def modulus_scale(energy: ReducedEnergy) -> float:
    """Stress scale of an energy, taken as |d2w(1)| / 12.

    For the neo-Hookean energy this recovers the shear modulus exactly
    (d2w(1) = 12 G).  Degenerate energies with d2w(1) = 0 fall back to 1.0
    so tolerance checks still have a usable scale.
    """
    scale = abs(float(energy.d2w(1.0))) / 12.0
    return scale if scale > 0.0 else 1.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the structural-assumption checks on an energy."""

    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def validate(energy: ReducedEnergy, lam_min: float, lam_max: float, n: int) -> ValidationReport:
    """Check the structural assumptions on an energy over a log grid.

    Parameters
    ----------
    energy : ReducedEnergy
    lam_min, lam_max : float
        Grid bounds, 0 < lam_min < 1 < lam_max.
    n : int
        Number of grid points, n >= 3.

    Returns
    -------
    ValidationReport
        One CheckResult per assumption; report.ok is the conjunction.
    """
    if not (0.0 < lam_min < 1.0 < lam_max):
        raise ValueError("grid bounds must satisfy 0 < lam_min < 1 < lam_max")
    if n < 3:
        raise ValueError("need at least 3 grid points")

    grid = np.geomspace(lam_min, lam_max, n)
    off_identity = grid[np.abs(grid - 1.0) > 1e-9]
    gscale = modulus_scale(energy)
    checks: list[CheckResult] = []

    w1 = float(energy.w(1.0))
    checks.append(
        CheckResult(
            "zero-at-identity",
            abs(w1) <= 1e-12 * gscale,
            f"w(1) = {w1:.3e}",
        )
    )

    dw1 = float(energy.dw(1.0))
    checks.append(
        CheckResult(
            "stationary-at-identity",
            abs(dw1) <= 1e-10 * gscale,
            f"dw(1) = {dw1:.3e}",
        )
    )

    w_vals = np.asarray(energy.w(off_identity), dtype=float)
    checks.append(
        CheckResult(
            "positive-away-from-identity",
            bool(np.all(w_vals > 0.0)),
            f"min w off identity = {w_vals.min():.3e}",
        )
    )

    dw_vals = np.asarray(energy.dw(off_identity), dtype=float)
    sign_ok = bool(np.all(dw_vals * (off_identity - 1.0) > 0.0))
    checks.append(
        CheckResult(
            "sign-condition",
            sign_ok,
            "dw(lam)*(lam-1) > 0 off identity" if sign_ok else "sign violation on grid",
        )
    )

    # Unboundedness is untestable as a limit; check monotone growth on the
    # tensile tail plus a concrete gain over the identity value.
    tail = grid[grid >= 1.0]
    tail_w = np.asarray(energy.w(tail), dtype=float)
    growing = bool(np.all(np.diff(tail_w) > 0.0)) if tail.size >= 2 else True
    gained = float(energy.w(lam_max)) > w1 + gscale
    checks.append(
        CheckResult(
            "unbounded-growth",
            growing and gained,
            f"w({lam_max:g}) - w(1) = {float(energy.w(lam_max)) - w1:.3e}",
        )
    )

    checks.append(_derivative_check(energy, grid, order=1))
    checks.append(_derivative_check(energy, grid, order=2))

    return ValidationReport(tuple(checks))


def _derivative_check(energy: ReducedEnergy, grid: np.ndarray, order: int) -> CheckResult:
    """Compare dw or d2w against central finite differences of w."""
    gscale = modulus_scale(energy)
    rel = 1e-5 if order == 1 else 1e-4
    worst = 0.0
    for lam in map(float, grid):
        s = rel * lam
        wp = float(energy.w(lam + s))
        wm = float(energy.w(lam - s))
        if order == 1:
            fd = (wp - wm) / (2.0 * s)
            exact = float(energy.dw(lam))
        else:
            fd = (wp - 2.0 * float(energy.w(lam)) + wm) / (s * s)
            exact = float(energy.d2w(lam))
        err = abs(exact - fd) / max(abs(exact), gscale)
        worst = max(worst, err)
    name = "first-derivative-consistency" if order == 1 else "second-derivative-consistency"
    return CheckResult(name, worst <= 1e-6, f"max relative deviation {worst:.3e}")

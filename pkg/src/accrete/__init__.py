"""Steady treadmilling of an incompressible elastic shell accreting on a
rigid sphere: closed-form stress and kinematics, steady particle transport,
and the nonlinear solver for the treadmilling state with its asymptotic
estimators."""

from .strain_energy import (
    NeoHookean,
    ReducedEnergy,
    ValidationReport,
    eval_d2w,
    eval_dw,
    eval_w,
    validate,
)
from .mechanics import (
    FieldSample,
    ShellGeometry,
    equilibrium_residual,
    hoop_stress,
    outer_radius_rate,
    radial_stress,
    radius_of_particle,
    stress_profile,
    stretches,
    velocity,
)
from .diffusion import (
    SteadyProfiles,
    TransportParams,
    chemical_potential,
    flux,
    interface_residuals,
)
from .treadmill import (
    ModelParams,
    NoTreadmillingState,
    NumericFailure,
    Scales,
    Solvability,
    TreadmillState,
    compute_scales,
    grid_scan_oracle,
    large_bead_asymptote,
    small_bead_asymptote,
    small_bead_quadratic,
    solvable,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "NeoHookean",
    "ReducedEnergy",
    "ValidationReport",
    "eval_w",
    "eval_dw",
    "eval_d2w",
    "validate",
    "FieldSample",
    "ShellGeometry",
    "radius_of_particle",
    "stretches",
    "velocity",
    "radial_stress",
    "hoop_stress",
    "stress_profile",
    "equilibrium_residual",
    "outer_radius_rate",
    "TransportParams",
    "SteadyProfiles",
    "flux",
    "chemical_potential",
    "interface_residuals",
    "ModelParams",
    "Scales",
    "TreadmillState",
    "Solvability",
    "NoTreadmillingState",
    "NumericFailure",
    "compute_scales",
    "solvable",
    "solve",
    "grid_scan_oracle",
    "small_bead_asymptote",
    "small_bead_quadratic",
    "large_bead_asymptote",
]

"""Rotation numbers, Arnold-tongue boundaries and slow-fast geometry for the
Josephson equation dx/dt = (cos x + a + b cos t)/mu."""

from jtongues._core import (
    Params,
    State,
    IntegratorConfig,
    Trajectory,
    MobiusMap,
    MapClass,
    RotationMethod,
    RotationResult,
    Side,
    TraceDirection,
    TraceConfig,
    BoundarySample,
    BoundaryCurve,
    Bridge,
    BesselEval,
    ResidualScan,
    Region,
    SlowCurve,
    SlowCurveComponent,
    vector_field,
    reflect,
    integrate,
    integrate_with_variations,
    poincare_lift,
    fit_mobius,
    classify,
    rotation_number,
    half_period_value,
    boundary_condition,
    initial_a,
    validated_initial_a,
    trace_boundary,
    find_bridges,
    tongue_gap,
    bessel_j,
    boundary_asymptote,
    residual_scan,
    classify_region,
    slow_curve,
    fold_points,
)

__all__ = [
    "Params", "State", "IntegratorConfig", "Trajectory", "MobiusMap", "MapClass",
    "RotationMethod", "RotationResult", "Side", "TraceDirection", "TraceConfig",
    "BoundarySample", "BoundaryCurve", "Bridge", "BesselEval", "ResidualScan",
    "Region", "SlowCurve", "SlowCurveComponent",
    "vector_field", "reflect", "integrate", "integrate_with_variations",
    "poincare_lift", "fit_mobius", "classify", "rotation_number",
    "half_period_value", "boundary_condition", "initial_a", "validated_initial_a",
    "trace_boundary", "find_bridges", "tongue_gap", "bessel_j",
    "boundary_asymptote", "residual_scan", "classify_region", "slow_curve",
    "fold_points",
]

__version__ = "0.1.0"

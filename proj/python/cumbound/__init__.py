"""Exact cumulant-bound coefficients, moment transforms and tail calculators.

The heavy lifting lives in the C++ extension; this package re-exports its
surface. Exact values cross the boundary as ``int`` / ``fractions.Fraction``.
"""

from cumbound._core import (
    BoundReport,
    ConverseReport,
    DerivedParams,
    EfficiencyGap,
    ForwardBound,
    PartitionClass,
    RateConstant,
    ReferenceLaw,
    __version__,
    asymptotic_coefficient,
    bell_ordinary,
    bernstein_tail,
    bound_report,
    center_moments,
    cgf_quadratic_bound,
    cgf_radius_lower_bound,
    coefficient_mass,
    compute_A_cen,
    converse_sweep,
    count_restricted,
    cumulant_condition_check,
    cumulants_to_moments,
    derive_params,
    efficiency_gap,
    egf_coefficients,
    empirical_moments,
    enumerate_partitions,
    envelope,
    forward_bound,
    joint_cumulant,
    law,
    law_bound_report,
    law_converse_sweep,
    law_registry,
    moments_to_cumulants,
    multivariate_bound,
    no_singleton_bell,
    ordered_bell,
    rademacher_rate,
    rate,
    ratio_diagnostic,
    stirling2,
    validate_moment_growth,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

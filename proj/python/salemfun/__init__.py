"""Permutation-modified Salem functions over weighted digit systems."""

from ._core import (
    AffinePair,
    BoxCountReport,
    CoverReport,
    Cylinder,
    CylinderBounds,
    DigitPermutation,
    DigitString,
    DimensionBounds,
    FixedSetClass,
    FixedSetKind,
    FrequencyTable,
    GraphCloud,
    GraphPoint,
    IncrementResult,
    IntegralResult,
    JumpReport,
    ModifiedSalem,
    MonotonicityWitness,
    MoranResult,
    SalemError,
    SalemSystem,
    SelfAffinityReport,
    apply_permutation,
    attractor_chaos,
    attractor_deterministic,
    box_count,
    canonicalize,
    classic_salem,
    cloud_from_points,
    constant_tail_value,
    cover_area,
    cylinder_bounds,
    decode,
    default_depth,
    derivative_ratio_sequence,
    digit_frequencies,
    encode,
    eval_f,
    eval_on_digits,
    fixed_point_set,
    functional_eq_residual,
    graph_dimension_bounds,
    identity_permutation,
    ifs_maps,
    increment_on_cylinder,
    integral_closed_form,
    integral_riemann,
    make_digit_string,
    make_modified_salem,
    make_permutation,
    monotonicity_witness,
    moran_dimension,
    one_sided_limits,
    reversal_permutation,
    sample_digits,
    shift,
    singularity_rate,
    truncate,
    validate_system,
    verify_self_affinity,
)

__all__ = [
    "AffinePair",
    "BoxCountReport",
    "CoverReport",
    "Cylinder",
    "CylinderBounds",
    "DigitPermutation",
    "DigitString",
    "DimensionBounds",
    "FixedSetClass",
    "FixedSetKind",
    "FrequencyTable",
    "GraphCloud",
    "GraphPoint",
    "IncrementResult",
    "IntegralResult",
    "JumpReport",
    "ModifiedSalem",
    "MonotonicityWitness",
    "MoranResult",
    "SalemError",
    "SalemSystem",
    "SelfAffinityReport",
    "apply_permutation",
    "attractor_chaos",
    "attractor_deterministic",
    "box_count",
    "canonicalize",
    "classic_salem",
    "cloud_from_points",
    "constant_tail_value",
    "cover_area",
    "cylinder_bounds",
    "decode",
    "default_depth",
    "derivative_ratio_sequence",
    "digit_frequencies",
    "encode",
    "eval_f",
    "eval_on_digits",
    "fixed_point_set",
    "functional_eq_residual",
    "graph_dimension_bounds",
    "identity_permutation",
    "ifs_maps",
    "increment_on_cylinder",
    "integral_closed_form",
    "integral_riemann",
    "make_digit_string",
    "make_modified_salem",
    "make_permutation",
    "monotonicity_witness",
    "moran_dimension",
    "one_sided_limits",
    "reversal_permutation",
    "sample_digits",
    "shift",
    "singularity_rate",
    "truncate",
    "validate_system",
    "verify_self_affinity",
]

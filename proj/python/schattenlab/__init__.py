"""Finite matrix truncations of Schatten-class operators.

Trace-inequality scenario runners, unitary-orbit optimizers,
C-numerical-range geometry, and Hausdorff set convergence, backed by the
C++ core. Matrices are numpy complex arrays throughout; Schatten indices
are floats with ``math.inf`` selecting the operator norm.
"""

from ._core import (
    CompactSet,
    CSpectrumSample,
    HarnessReport,
    HermitianExtremes,
    InclusionReport,
    OrbitParams,
    OrbitResult,
    RangeSample,
    ScenarioParams,
    ScenarioReport,
    SchattenError,
    SupportProfile,
    alternating_bilinear_max,
    builtin_example,
    builtin_example_ids,
    builtin_limit_radius,
    c_spectrum,
    convergence_harness,
    convex_hull,
    cut_out_block,
    eigenvalues_normal,
    epsilon_cover_check,
    extremes_of_real_sets,
    haar_unitary,
    hausdorff_distance,
    hermitian_orbit_extremes,
    hull_inclusion_check,
    modified_sequence,
    orbit_value,
    positive_negative_parts,
    run_hermitian_bounds,
    run_range_geometry,
    run_truncation_convergence,
    run_von_neumann,
    s_range_radius,
    sample_equivalence_range,
    sample_similarity_range,
    scaled_diagonal_sum,
    schatten_norm,
    similarity_orbit_ascent,
    similarity_target_descent,
    singular_pairing,
    singular_values,
    star_center_probe,
    support_profile,
    trace,
    truncate_projection,
    zero_pad,
)

__version__ = "0.1.0"

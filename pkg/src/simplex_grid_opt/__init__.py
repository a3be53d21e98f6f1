"""Exact rational optimization of homogeneous polynomials over simplex grids.

The package minimizes a fixed-degree homogeneous polynomial over the grid of
simplex points with a common denominator, computes urn-model expectations and
moments exactly, evaluates every supported error-bound coefficient in exact
arithmetic, verifies the combinatorial identities those bounds rest on, and
turns grid values into certified stability-number bounds for graphs.
"""

from .bounds import (
    ALL_KINDS,
    BoundKind,
    BoundReport,
    BoundWitness,
    DegenerateRangeError,
    RangeAssumptions,
    bound_coefficient,
    check_bound,
    cubic_threshold_reached,
    max_enclosure,
    min_enclosure,
    range_upper_bound,
    rho_interval,
)
from .combin import (
    FallingPolyCoeffs,
    binomial,
    composition_count,
    compositions,
    falling,
    falling_poly_coeffs,
    multinomial,
    stirling2,
)
from .grid import (
    GridMinResult,
    GridSpec,
    GridTooLargeError,
    enumerate_grid,
    grid_maximize,
    grid_minimize,
    range_enclosures,
)
from .hypergeom import (
    HypergeomParams,
    bernstein_approximation,
    cubic_moments_closed,
    expectation,
    moment,
    moment_bruteforce,
    pmf,
    quadratic_moments_closed,
    scaled_moment,
    scaled_moment_bruteforce,
)
from .identities import (
    IdentityCheck,
    IdentityName,
    a_beta,
    a_beta_sum_identity,
    moment_decomposition_check,
    run_default_sweeps,
    verify_identity,
)
from .poly import (
    BernsteinTable,
    HomogeneousPolynomial,
    bernstein_enclosure,
    bernstein_table,
    elevate,
    evaluate,
    from_json_dict,
    homogenize,
    is_square_free,
    load_polynomial,
    poly_add,
    poly_mul,
    poly_scale,
    random_polynomial,
    to_json_dict,
)
from .rational import Enclosure, Rational, as_rational, decimal_str, fraction_str
from .stableset import (
    Graph,
    StableSetBound,
    alpha_lower_bound,
    exact_alpha,
    greedy_stable_set,
    load_graph,
    motzkin_straus_form,
    parse_graph_text,
)

__version__ = "0.1.0"

"""Zero sets of cube and ball Fourier transforms, orthogonality of exponential
families, and distinct-distance counting."""

from ._core import (
    ConvergenceError,
    HorizonError,
    ParseError,
    __version__,
    ball_zero_radii,
    bessel_j,
    bessel_zeros,
    check_orthogonal,
    check_orthogonal_csv,
    contradiction_table,
    distinct_distance_count,
    erdos_bound,
    inner_product_numeric,
    search_orthogonal_set,
    separation_radius,
    spectrum_distance_demand,
    transform_value,
    zero_count,
)

__all__ = [
    "ConvergenceError",
    "HorizonError",
    "ParseError",
    "__version__",
    "ball_zero_radii",
    "bessel_j",
    "bessel_zeros",
    "check_orthogonal",
    "check_orthogonal_csv",
    "contradiction_table",
    "distinct_distance_count",
    "erdos_bound",
    "inner_product_numeric",
    "search_orthogonal_set",
    "separation_radius",
    "spectrum_distance_demand",
    "transform_value",
    "zero_count",
]

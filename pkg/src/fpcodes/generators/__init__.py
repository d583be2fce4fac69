"""Input codes: polynomial evaluation codes over prime fields, the
first-coordinate partition of a uniformly distributed code, and seeded
random codes."""
from .field import PrimeField, is_prime
from .partition import (
    first_coordinate_counts,
    partition_by_first_coordinate,
    permute_coordinates,
)
from .polynomial import gen_polynomial_fp_code
from .random_code import gen_random_code, gen_random_grouping


__all__ = [
    "PrimeField",
    "is_prime",
    "gen_polynomial_fp_code",
    "first_coordinate_counts",
    "partition_by_first_coordinate",
    "permute_coordinates",
    "gen_random_code",
    "gen_random_grouping",
]

"""Exact point counting over rational function fields and their quadratic
extensions: heights, divisor-count sequences, zeta values, Riemann-Roch
class models, Moebius-inversion counters and brute-force oracles.

Everything numeric is exact (ints and Fractions); floats appear only in
clearly labeled report columns.
"""

from .counting import (
    CountResult,
    brute_count_rational,
    count_degree2_points_by_fields,
    count_fixed_degree_points,
    moebius_point_count,
    schanuel_sum_quadratic,
)
from .errors import ConsistencyError, DescriptorError, RefusalError
from .gf import GF, FiniteField
from .quadratic import QuadraticFieldDesc, enumerate_quadratic_fields
from .riemann_roch import ClassModel, build_class_model
from .zeta import (
    CurveDescriptor,
    divisor_counts,
    moebius_sums,
    schanuel_constant,
    zeta_value,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FiniteField",
    "CurveDescriptor",
    "ClassModel",
    "CountResult",
    "QuadraticFieldDesc",
    "RefusalError",
    "ConsistencyError",
    "DescriptorError",
    "brute_count_rational",
    "moebius_point_count",
    "count_fixed_degree_points",
    "count_degree2_points_by_fields",
    "enumerate_quadratic_fields",
    "schanuel_sum_quadratic",
    "build_class_model",
    "divisor_counts",
    "moebius_sums",
    "zeta_value",
    "schanuel_constant",
    "__version__",
]

"""Root finding for polynomials over GF(2^m).

Provides table-driven field arithmetic, a Chien-search baseline, an
incremental Gray-code evaluator built on an affine-block decomposition,
a brute-force oracle, and exact operation accounting for both
production methods.
"""

from .bench import BenchRow, DEFAULT_DEGREES, format_rows, predicted_cost_ratio, run_benchmark
from .decompose import Block, Decomposition, block_count, decompose, recompose
from .errors import (
    BadSpec,
    DegenerateInput,
    DivisionByZero,
    GFRootsError,
    NotPrimitive,
    ZeroToZero,
)
from .field import (
    DEFAULT_PRIMITIVE_POLY,
    Field,
    FieldSpec,
    MAX_M,
    MIN_M,
    build_field,
    default_spec,
)
from .graycode import GrayStep, gray_sequence
from .linearized import AffinePoly, affine_walk, build_table, eval_by_table, eval_direct
from .poly import (
    degree,
    eval_horner,
    normalize,
    poly_from_roots,
    poly_mul,
    random_poly,
    random_poly_with_roots,
)
from .roots import (
    CountingField,
    OpCounts,
    brute_force_roots,
    chien_search,
    count_ops,
    fast_eval_all,
    fast_find_roots,
    predict_ops,
)

__all__ = [
    "AffinePoly",
    "BadSpec",
    "BenchRow",
    "Block",
    "CountingField",
    "DEFAULT_DEGREES",
    "DEFAULT_PRIMITIVE_POLY",
    "Decomposition",
    "DegenerateInput",
    "DivisionByZero",
    "Field",
    "FieldSpec",
    "GFRootsError",
    "GrayStep",
    "MAX_M",
    "MIN_M",
    "NotPrimitive",
    "OpCounts",
    "ZeroToZero",
    "affine_walk",
    "block_count",
    "brute_force_roots",
    "build_field",
    "build_table",
    "chien_search",
    "count_ops",
    "decompose",
    "default_spec",
    "degree",
    "eval_by_table",
    "eval_direct",
    "eval_horner",
    "fast_eval_all",
    "fast_find_roots",
    "format_rows",
    "gray_sequence",
    "normalize",
    "poly_from_roots",
    "poly_mul",
    "predict_ops",
    "predicted_cost_ratio",
    "random_poly",
    "random_poly_with_roots",
    "recompose",
    "run_benchmark",
]

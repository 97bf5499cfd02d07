"""Wall-clock comparison of the two full-field evaluation methods."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import BadSpec
from .field import FieldSpec, build_field, default_spec
from .poly import random_poly
from .roots import chien_search, fast_find_roots, predict_ops

DEFAULT_DEGREES = (6, 7, 8, 9, 10, 11, 16, 24, 32)


@dataclass
class BenchRow:
    degree: int
    chien_us: float
    fast_us: float
    speedup: float
    predicted_ratio: float


def predicted_cost_ratio(
    deg: int, m: int, weights: tuple[float, float, float] = (1.0, 1.0, 1.0)
) -> float:
    """Chien cost over fast cost under (add, mul, exp) weights."""
    w_add, w_mul, w_exp = weights

    def cost(counts) -> float:
        return w_add * counts.adds + w_mul * counts.muls + w_exp * counts.exps

    return cost(predict_ops("chien", deg, m)) / cost(predict_ops("fast", deg, m))


def run_benchmark(
    m: int,
    degrees: Sequence[int],
    trials: int = 1000,
    seed: int = 0,
    prim_poly: int | None = None,
    weights: tuple[float, float, float] = (1.0, 1.0, 1.0),
) -> list[BenchRow]:
    """Mean per-polynomial time of a full-field root scan, per method.

    Polynomial generation is seeded and stays outside the timed region;
    the fast method's table setup is part of its cost and stays inside.
    Runs single-threaded, one degree after another.
    """
    if not degrees:
        raise BadSpec("need at least one degree to benchmark")
    if any(d < 1 for d in degrees):
        raise BadSpec("benchmark degrees must be >= 1")
    if trials < 1:
        raise BadSpec("trials must be >= 1")
    spec = FieldSpec(m, prim_poly) if prim_poly is not None else default_spec(m)
    field = build_field(spec)
    rng = random.Random(seed)
    rows = []
    for deg in degrees:
        polys = [random_poly(deg, field, rng) for _ in range(trials)]
        start = time.perf_counter()
        for p in polys:
            chien_search(p, field)
        chien_us = (time.perf_counter() - start) / trials * 1e6
        start = time.perf_counter()
        for p in polys:
            fast_find_roots(p, field)
        fast_us = (time.perf_counter() - start) / trials * 1e6
        rows.append(
            BenchRow(
                degree=deg,
                chien_us=chien_us,
                fast_us=fast_us,
                speedup=chien_us / fast_us,
                predicted_ratio=predicted_cost_ratio(deg, m, weights),
            )
        )
    return rows


def format_rows(rows: Sequence[BenchRow], fmt: str = "text") -> str:
    """Aligned table, or one JSON record per row for fmt="machine"."""
    if fmt == "machine":
        return "\n".join(json.dumps(asdict(row)) for row in rows)
    header = f"{'degree':>6} {'chien_us':>12} {'fast_us':>12} {'speedup':>8} {'predicted':>10}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.degree:>6} {r.chien_us:>12.2f} {r.fast_us:>12.2f}"
            f" {r.speedup:>8.2f} {r.predicted_ratio:>10.2f}"
        )
    return "\n".join(lines)

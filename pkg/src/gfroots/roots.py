"""Root finders over the whole field, plus exact operation accounting.

Three interchangeable finders: Chien search (the baseline), an
incremental Gray-code evaluator built on the affine-block
decomposition, and a brute-force Horner scan kept as an independent
oracle.  ``count_ops`` reruns a finder against a counting view of the
field and must reproduce the closed forms in ``predict_ops`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .decompose import block_count, decompose
from .errors import DegenerateInput
from .field import Field
from .linearized import build_table
from .poly import eval_horner


@dataclass
class OpCounts:
    """Tallies of field additions, multiplications and exponentiations."""

    adds: int = 0
    muls: int = 0
    exps: int = 0


class CountingField(Field):
    """View of an existing field that tallies add/mul/pow calls."""

    def __init__(self, base: Field) -> None:
        # Reuse the validated tables instead of calling Field.__init__.
        self.spec = base.spec
        self.m = base.m
        self.order = base.order
        self.antilog = base.antilog
        self.log = base.log
        self.counts = OpCounts()

    def add(self, a: int, b: int) -> int:
        self.counts.adds += 1
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self.counts.muls += 1
        return Field.mul(self, a, b)

    def pow(self, a: int, e: int) -> int:
        self.counts.exps += 1
        return Field.pow(self, a, e)


def _checked_degree(p: Sequence[int]) -> int:
    if all(c == 0 for c in p):
        raise DegenerateInput("the zero polynomial vanishes everywhere")
    deg = len(p) - 1
    if deg == 0:
        raise DegenerateInput("a nonzero constant has no roots")
    return deg


def chien_search(p: Sequence[int], field: Field) -> set[int]:
    """All roots of p, scanning the nonzero elements alpha^1 .. alpha^0.

    Term j keeps a running value c_j * x^j that one multiplication by
    alpha^j advances to the next point, so every point costs exactly
    deg(p) multiplications and deg(p) additions.  Zero is reported as a
    root precisely when the constant term vanishes.
    """
    deg = _checked_degree(p)
    n = field.order - 1
    antilog = field.antilog
    add = field.add
    mul = field.mul
    ratios = [antilog[j % n] for j in range(deg + 1)]  # ratios[0] unused
    terms = list(p)
    roots = set()
    if p[0] == 0:
        roots.add(0)
    for i in range(1, n + 1):
        value = terms[0]
        for j in range(1, deg + 1):
            terms[j] = mul(terms[j], ratios[j])
            value = add(value, terms[j])
        if value == 0:
            roots.add(antilog[i % n])
    return roots


def fast_eval_all(p: Sequence[int], field: Field) -> Iterator[tuple[int, int]]:
    """Evaluate p at every field element in Gray-code order.

    Yields (x, p(x)) pairs starting at x = 0, whose value is the
    constant term for free.  Setup tabulates each block's linearized
    part on the m basis elements (4 muls + 3 adds per entry).  Every
    later point costs one XOR per block for the incremental updates,
    a Horner combine over the block values in x^5 plus the cubic term
    (N muls + N adds for N blocks), and two exponentiations.
    """
    _checked_degree(p)
    return _fast_eval_iter(p, field)


def _fast_eval_iter(p: Sequence[int], field: Field) -> Iterator[tuple[int, int]]:
    dec = decompose(p)
    tables = [build_table(b.lcoeffs, field) for b in dec.blocks]
    accs = [b.constant for b in dec.blocks]
    nblocks = len(accs)
    cubic = dec.cubic
    add = field.add
    mul = field.mul
    powf = field.pow
    yield 0, accs[0]
    x = 0
    for j in range(1, field.order):
        flip = (j & -j).bit_length() - 1
        x ^= 1 << flip
        for i in range(nblocks):
            accs[i] = add(accs[i], tables[i][flip])
        x3 = powf(x, 3)
        x5 = powf(x, 5)  # always computed: the per-point op profile stays fixed
        value = accs[nblocks - 1]
        for i in range(nblocks - 2, -1, -1):
            value = add(mul(value, x5), accs[i])
        value = add(value, mul(cubic, x3))
        yield x, value


def fast_find_roots(p: Sequence[int], field: Field) -> set[int]:
    """Roots of p via the incremental Gray-code evaluator."""
    return {x for x, value in fast_eval_all(p, field) if value == 0}


def brute_force_roots(p: Sequence[int], field: Field) -> set[int]:
    """Independent oracle: plain Horner evaluation at every element."""
    _checked_degree(p)
    return {x for x in range(field.order) if eval_horner(p, x, field) == 0}


def count_ops(method: str, p: Sequence[int], field: Field) -> OpCounts:
    """Exact operation tallies from running a finder on a counting field."""
    counting = CountingField(field)
    if method == "chien":
        chien_search(p, counting)
    elif method == "fast":
        for _ in fast_eval_all(p, counting):
            pass
    else:
        raise ValueError(f"unknown method {method!r}")
    return counting.counts


def predict_ops(method: str, deg: int, m: int) -> OpCounts:
    """Closed-form operation counts for a full-field scan.

    Chien search pays deg muls and deg adds at each of the 2^m - 1
    nonzero points.  The fast method pays a setup of 4 muls + 3 adds
    per block per basis element, then N muls, 2N adds and two
    exponentiations per nonzero point, N being the block count.
    """
    points = (1 << m) - 1
    if method == "chien":
        return OpCounts(adds=deg * points, muls=deg * points, exps=0)
    if method == "fast":
        nblocks = block_count(deg)
        return OpCounts(
            adds=3 * m * nblocks + 2 * nblocks * points,
            muls=4 * m * nblocks + nblocks * points,
            exps=2 * points,
        )
    raise ValueError(f"unknown method {method!r}")

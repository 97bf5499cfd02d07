"""Dense polynomials over GF(2^m) as ascending coefficient lists.

``p[j]`` holds the coefficient of ``x**j``, so the constant term comes
first.  A normalized polynomial has a nonzero leading coefficient; the
zero polynomial is canonically ``[0]``.
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import BadSpec
from .field import Field


def normalize(coeffs: Sequence[int]) -> list[int]:
    """Drop trailing zero coefficients; the zero polynomial becomes [0]."""
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    out = list(coeffs[:end])
    return out or [0]


def degree(coeffs: Sequence[int]) -> int:
    """Degree of a normalized polynomial ([0] counts as degree 0)."""
    return len(coeffs) - 1


def eval_horner(coeffs: Sequence[int], x: int, field: Field) -> int:
    """Evaluate at ``x`` by nested multiplication: deg(p) muls and adds."""
    mul = field.mul
    add = field.add
    acc = coeffs[-1]
    for j in range(len(coeffs) - 2, -1, -1):
        acc = add(mul(acc, x), coeffs[j])
    return acc


def poly_mul(a: Sequence[int], b: Sequence[int], field: Field) -> list[int]:
    """Coefficient-wise product (XOR-accumulated convolution)."""
    out = [0] * (len(a) + len(b) - 1)
    mul = field.mul
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] ^= mul(ca, cb)
    return out


def poly_from_roots(roots: Sequence[int], field: Field) -> list[int]:
    """Monic product of (x - r) over the given roots; repeats allowed.

    Subtraction equals addition in characteristic 2, so each factor is
    literally ``[r, 1]``.  The empty product is ``[1]``.
    """
    coeffs = [1]
    for r in roots:
        coeffs = poly_mul(coeffs, [r, 1], field)
    return coeffs


def random_poly(deg: int, field: Field, rng: random.Random) -> list[int]:
    """Uniform coefficients with a nonzero leading term: always normalized."""
    coeffs = [rng.randrange(field.order) for _ in range(deg)]
    coeffs.append(rng.randrange(1, field.order))
    return coeffs


def random_poly_with_roots(
    deg: int, num_roots: int, field: Field, rng: random.Random
) -> tuple[list[int], list[int]]:
    """Random polynomial of exact degree ``deg`` with planted roots.

    Multiplies ``num_roots`` random linear factors by a random cofactor
    of the remaining degree (a nonzero constant when none remains).
    Returns the polynomial and the planted roots; the cofactor may
    contribute further roots of its own.
    """
    if num_roots < 0 or num_roots > deg:
        raise BadSpec(f"need 0 <= num_roots <= degree, got {num_roots} > {deg}")
    planted = [rng.randrange(field.order) for _ in range(num_roots)]
    remaining = deg - num_roots
    if remaining:
        cofactor = random_poly(remaining, field, rng)
    else:
        cofactor = [rng.randrange(1, field.order)]
    return poly_mul(poly_from_roots(planted, field), cofactor, field), planted

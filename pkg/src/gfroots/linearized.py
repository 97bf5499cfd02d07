"""Linearized and affine polynomials over GF(2^m).

A linearized polynomial ``L(y) = sum_j c_j * y**(2**j)`` is a
GF(2)-linear map of the field into itself: its value at any point is
the XOR of its values on the basis elements selected by the point's
coordinate bits.  Tabulating those m basis values once lets an affine
polynomial ``L(y) + beta`` be evaluated over the whole field with a
single XOR per point along a Gray-code walk, because consecutive points
differ by one basis element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .field import Field
from .graycode import GrayStep


@dataclass(frozen=True)
class AffinePoly:
    """Linearized part (entry j multiplies y^(2^j)) plus a constant term."""

    lcoeffs: tuple[int, ...]
    beta: int


def eval_direct(lcoeffs: Sequence[int], y: int, field: Field) -> int:
    """Evaluate sum_j c_j * y**(2**j), squaring y repeatedly."""
    acc = 0
    power = y
    for c in lcoeffs:
        acc = field.add(acc, field.mul(c, power))
        power = field.mul(power, power)
    return acc


def build_table(lcoeffs: Sequence[int], field: Field) -> list[int]:
    """Values of the linearized polynomial at alpha^0 .. alpha^(m-1).

    The powers (alpha^k)^(2^j) come from doubling the exponent modulo
    2^m - 1, so each entry costs exactly len(lcoeffs) multiplications
    and len(lcoeffs) - 1 additions.
    """
    n = field.order - 1
    vals = []
    for k in range(field.m):
        e = k
        acc = None
        for c in lcoeffs:
            term = field.mul(c, field.antilog[e])
            acc = term if acc is None else field.add(acc, term)
            e = (e << 1) % n
        vals.append(acc if acc is not None else 0)
    return vals


def eval_by_table(table: Sequence[int], y: int) -> int:
    """XOR of the tabulated basis values selected by the set bits of y."""
    acc = 0
    k = 0
    while y:
        if y & 1:
            acc ^= table[k]
        y >>= 1
        k += 1
    return acc


def affine_walk(
    affine: AffinePoly, steps: Iterable[GrayStep], table: Sequence[int]
) -> Iterator[int]:
    """Values of the affine polynomial along a Gray walk over the field.

    ``steps`` must start at the zero element, where the value is just
    the constant term; every later step costs one XOR against the table
    entry of the flipped bit.  ``table`` must be built from
    ``affine.lcoeffs`` over the same field.
    """
    it = iter(steps)
    try:
        first = next(it)
    except StopIteration:
        return
    if first.value != 0:
        raise ValueError("walk must start at the zero element")
    value = affine.beta
    yield value
    for step in it:
        value ^= table[step.flipped_bit]
        yield value

"""Binary-reflected Gray-code walk over the elements of GF(2^m).

Step ``j`` visits ``j ^ (j >> 1)``.  Consecutive values differ in
exactly one bit; for ``j >= 1`` that bit is the number of trailing
zeros of ``j``, so each step costs a few integer ops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BadSpec
from .field import MAX_M, MIN_M


@dataclass(frozen=True)
class GrayStep:
    index: int
    value: int
    flipped_bit: int | None  # None only on the first step


def gray_sequence(m: int) -> Iterator[GrayStep]:
    """Yield all 2^m field elements one bit flip apart, starting at 0."""
    if not MIN_M <= m <= MAX_M:
        raise BadSpec(f"m must be in [{MIN_M}, {MAX_M}], got {m}")
    return _steps(m)


def _steps(m: int) -> Iterator[GrayStep]:
    yield GrayStep(0, 0, None)
    for j in range(1, 1 << m):
        yield GrayStep(j, j ^ (j >> 1), (j & -j).bit_length() - 1)

"""Split a polynomial into a cubic term plus affine blocks.

Any coefficient list c_0..c_t can be regrouped as

    F(x) = c_3*x^3
         + sum_i x^(5i) * (c_{5i} + c_{5i+1}*x + c_{5i+2}*x^2
                            + c_{5i+4}*x^4 + c_{5i+8}*x^8)

with i running over ceil((t+1)/5) blocks and out-of-range indices read
as zero.  Every exponent e lands in exactly one slot: residues 0, 1, 2
and 4 mod 5 go straight into block (e - residue) / 5, while residue 3
splits into the lone x^3 term (e = 3) and the x^8 slot of block
(e - 8) / 5 (e >= 8).  The parenthesized factors are affine in x, since
the inner exponents 1, 2, 4, 8 are powers of two, which is what enables
one-XOR-per-point evaluation along a Gray-code walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateInput
from .poly import normalize

BLOCK_SPAN = 5
LIN_TERMS = 4  # slots for x, x^2, x^4, x^8


@dataclass
class Block:
    """One x^(5i)-weighted affine summand."""

    constant: int
    lcoeffs: list[int]  # exactly LIN_TERMS entries, zero-padded


@dataclass
class Decomposition:
    cubic: int
    blocks: list[Block]
    source_degree: int


def block_count(deg: int) -> int:
    """Number of affine blocks covering a polynomial of this degree."""
    if deg < 0:
        raise ValueError("degree must be nonnegative")
    return max(1, -((deg + 1) // -BLOCK_SPAN))


def decompose(p: Sequence[int]) -> Decomposition:
    """Route the coefficients of a normalized nonzero polynomial into blocks."""
    if all(c == 0 for c in p):
        raise DegenerateInput("cannot decompose the zero polynomial")
    deg = len(p) - 1

    def coeff(e: int) -> int:
        return p[e] if e <= deg else 0

    blocks = []
    for i in range(block_count(deg)):
        base = BLOCK_SPAN * i
        blocks.append(
            Block(
                constant=coeff(base),
                lcoeffs=[coeff(base + 1), coeff(base + 2), coeff(base + 4), coeff(base + 8)],
            )
        )
    return Decomposition(cubic=coeff(3), blocks=blocks, source_degree=deg)


def recompose(d: Decomposition) -> list[int]:
    """Expand back into a dense coefficient list (round-trip oracle).

    Purely formal: each slot XORs its coefficient onto the exponent it
    represents, so no field context is needed.
    """
    top = max(3, BLOCK_SPAN * (len(d.blocks) - 1) + 8)
    coeffs = [0] * (top + 1)
    coeffs[3] ^= d.cubic
    for i, block in enumerate(d.blocks):
        base = BLOCK_SPAN * i
        coeffs[base] ^= block.constant
        for j, c in enumerate(block.lcoeffs):
            coeffs[base + (1 << j)] ^= c
    return normalize(coeffs)

"""Arithmetic in GF(2^m) backed by logarithm and antilogarithm tables.

An element is a plain int in ``[0, 2**m)``; bit ``k`` is its coordinate
on the basis element ``alpha**k``, where ``alpha`` is a root of the
primitive polynomial defining the field.  Addition is XOR of the
coordinate vectors.  Multiplication, exponentiation and inversion go
through the log tables, so each costs a couple of lookups plus one
modular reduction of the exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadSpec, DivisionByZero, NotPrimitive, ZeroToZero

MIN_M = 2
MAX_M = 16

# One primitive polynomial per supported degree, as a bitmask whose bit k
# holds the coefficient of alpha^k.  The m=8 entry is the polynomial used
# by most Reed-Solomon codecs.
DEFAULT_PRIMITIVE_POLY = {
    2: 0b111,            # x^2 + x + 1
    3: 0b1011,           # x^3 + x + 1
    4: 0b10011,          # x^4 + x + 1
    5: 0b100101,         # x^5 + x^2 + 1
    6: 0b1000011,        # x^6 + x + 1
    7: 0b10000011,       # x^7 + x + 1
    8: 0b100011101,      # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,            # x^9 + x^4 + 1
    10: 0x409,           # x^10 + x^3 + 1
    11: 0x805,           # x^11 + x^2 + 1
    12: 0x1053,          # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,          # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,          # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,          # x^15 + x + 1
    16: 0x1100B,         # x^16 + x^12 + x^3 + x + 1
}


@dataclass(frozen=True)
class FieldSpec:
    """Extension degree plus the bitmask of a degree-m polynomial over GF(2)."""

    m: int
    prim_poly: int

    def validate(self) -> None:
        if not MIN_M <= self.m <= MAX_M:
            raise BadSpec(f"extension degree must be in [{MIN_M}, {MAX_M}], got {self.m}")
        if self.prim_poly <= 0 or self.prim_poly.bit_length() != self.m + 1:
            raise BadSpec(
                f"polynomial mask {self.prim_poly:#x} does not have degree {self.m}"
            )
        if not self.prim_poly & 1:
            raise BadSpec("a primitive polynomial needs a nonzero constant term")


def default_spec(m: int) -> FieldSpec:
    """Spec for the built-in primitive polynomial of degree m."""
    if m not in DEFAULT_PRIMITIVE_POLY:
        raise BadSpec(f"no default primitive polynomial for m={m}")
    return FieldSpec(m, DEFAULT_PRIMITIVE_POLY[m])


class Field:
    """GF(2^m) with log/antilog tables built from a primitive polynomial.

    ``antilog[k]`` is the vector representation of ``alpha**k`` for
    ``k in [0, 2**m - 2]`` and ``log`` is its inverse on the nonzero
    elements (``log[0]`` is a placeholder that is never read).  Table
    construction doubles as the primitivity check: the orbit of alpha
    must visit every nonzero element exactly once.  Instances are
    immutable after construction and safe to share between threads.
    """

    def __init__(self, spec: FieldSpec) -> None:
        spec.validate()
        order = 1 << spec.m
        antilog = [0] * (order - 1)
        log = [0] * order
        x = 1
        for k in range(order - 1):
            if x == 1 and k > 0:
                raise NotPrimitive(
                    f"alpha has order {k} < {order - 1} under {spec.prim_poly:#x}"
                )
            antilog[k] = x
            log[x] = k
            x <<= 1
            if x & order:
                x ^= spec.prim_poly
        if x != 1:
            raise NotPrimitive(f"alpha orbit does not close under {spec.prim_poly:#x}")
        self.spec = spec
        self.m = spec.m
        self.order = order
        self.antilog = antilog
        self.log = log

    def __repr__(self) -> str:
        return f"Field(m={self.m}, prim_poly={self.spec.prim_poly:#x})"

    def elements(self) -> range:
        return range(self.order)

    def alpha_pow(self, k: int) -> int:
        """alpha**k for an arbitrary integer exponent."""
        return self.antilog[k % (self.order - 1)]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n = self.order - 1
        return self.antilog[(self.log[a] + self.log[b]) % n]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if a == 0:
            if e == 0:
                raise ZeroToZero("0**0 is undefined")
            return 0
        if e == 0:
            return 1
        n = self.order - 1
        return self.antilog[(self.log[a] * e) % n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        n = self.order - 1
        return self.antilog[(n - self.log[a]) % n]


def build_field(spec: FieldSpec) -> Field:
    """Build the log/antilog tables, validating primitivity on the way."""
    return Field(spec)

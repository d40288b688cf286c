"""Signed-zero extended float values.

An :class:`SzValue` is one of finite(sign, magnitude), +0, -0, +inf, -inf or a
single canonical NaN.  Special values are handled by explicit case analysis;
finite-with-finite results are delegated to the host's binary64 arithmetic so
rounding and overflow never diverge from hardware.
"""

from __future__ import annotations

import enum
import math
import struct
from dataclasses import dataclass

__all__ = [
    "Sign", "Kind", "RoundingMode", "SzValue", "UnsupportedClassError",
    "POS_ZERO", "NEG_ZERO", "POS_INF", "NEG_INF", "NAN", "ONE",
    "add", "sub", "mul", "div", "sqrt", "neg", "reciprocal", "copysign",
    "sign_bit", "numeric_eq", "same_repr", "encode_bits", "decode_bits",
    "parse_value", "format_bits",
]

SIGN_MASK = 0x8000_0000_0000_0000
EXP_MASK = 0x7FF0_0000_0000_0000
FRAC_MASK = 0x000F_FFFF_FFFF_FFFF
CANONICAL_NAN_BITS = 0x7FF8_0000_0000_0000


class UnsupportedClassError(ValueError):
    """Raised for binary64 values outside the modeled domain (subnormals)."""


class Sign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    def flip(self) -> Sign:
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE

    def xor(self, other: Sign) -> Sign:
        return Sign.POSITIVE if self is other else Sign.NEGATIVE


class Kind(enum.Enum):
    FINITE = "finite"
    ZERO = "zero"
    INFINITY = "infinity"
    NAN = "nan"


class RoundingMode(enum.Enum):
    TO_NEAREST = "to-nearest"
    TOWARD_NEGATIVE = "toward-negative"


@dataclass(frozen=True)
class SzValue:
    kind: Kind
    sign: Sign = Sign.POSITIVE
    magnitude: float = 0.0

    def __post_init__(self):
        if self.kind is Kind.FINITE:
            m = self.magnitude
            if not (math.isfinite(m) and m > 0.0):
                raise ValueError(f"finite magnitude must be positive and finite, got {m!r}")
            if m < 2.2250738585072014e-308:
                raise UnsupportedClassError(f"subnormal magnitude {m!r} is not modeled")
        elif self.magnitude != 0.0:
            raise ValueError(f"{self.kind.value} carries no magnitude")
        if self.kind is Kind.NAN and self.sign is not Sign.POSITIVE:
            object.__setattr__(self, "sign", Sign.POSITIVE)

    @classmethod
    def zero(cls, sign: Sign) -> SzValue:
        return cls(Kind.ZERO, sign)

    @classmethod
    def inf(cls, sign: Sign) -> SzValue:
        return cls(Kind.INFINITY, sign)

    @classmethod
    def from_float(cls, x: float) -> SzValue:
        x = float(x)
        if math.isnan(x):
            return NAN
        sign = Sign.NEGATIVE if math.copysign(1.0, x) < 0 else Sign.POSITIVE
        if x == 0.0:
            return cls.zero(sign)
        if math.isinf(x):
            return cls.inf(sign)
        return cls(Kind.FINITE, sign, abs(x))

    def to_float(self) -> float:
        if self.kind is Kind.NAN:
            return struct.unpack(">d", CANONICAL_NAN_BITS.to_bytes(8, "big"))[0]
        if self.kind is Kind.ZERO:
            base = 0.0
        elif self.kind is Kind.INFINITY:
            base = math.inf
        else:
            base = self.magnitude
        return -base if self.sign is Sign.NEGATIVE else base

    @property
    def is_nan(self) -> bool:
        return self.kind is Kind.NAN

    @property
    def is_zero(self) -> bool:
        return self.kind is Kind.ZERO

    @property
    def is_inf(self) -> bool:
        return self.kind is Kind.INFINITY

    def __str__(self) -> str:
        if self.kind is Kind.NAN:
            return "nan"
        if self.kind is Kind.ZERO:
            return self.sign.value + "0"
        if self.kind is Kind.INFINITY:
            return self.sign.value + "inf"
        text = repr(self.magnitude)
        if text.endswith(".0"):
            text = text[:-2]
        return ("-" if self.sign is Sign.NEGATIVE else "") + text


POS_ZERO = SzValue.zero(Sign.POSITIVE)
NEG_ZERO = SzValue.zero(Sign.NEGATIVE)
POS_INF = SzValue.inf(Sign.POSITIVE)
NEG_INF = SzValue.inf(Sign.NEGATIVE)
NAN = SzValue(Kind.NAN)
ONE = SzValue(Kind.FINITE, Sign.POSITIVE, 1.0)


def parse_value(text: str) -> SzValue:
    """Parse the textual spellings ``+0``, ``-0``, ``+inf``, ``-inf``, ``nan`` or a decimal."""
    t = text.strip().lower()
    if t in ("nan", "+nan", "-nan"):
        return NAN
    if t in ("inf", "+inf", "infinity", "+infinity"):
        return POS_INF
    if t in ("-inf", "-infinity"):
        return NEG_INF
    try:
        return SzValue.from_float(float(t))
    except ValueError:
        raise ValueError(f"not a value: {text!r}") from None


def neg(a: SzValue) -> SzValue:
    if a.is_nan:
        return NAN
    return SzValue(a.kind, a.sign.flip(), a.magnitude)


def add(a: SzValue, b: SzValue, rm: RoundingMode = RoundingMode.TO_NEAREST) -> SzValue:
    if a.is_nan or b.is_nan:
        return NAN
    if a.is_inf or b.is_inf:
        if a.is_inf and b.is_inf:
            return a if a.sign is b.sign else NAN
        return a if a.is_inf else b
    if a.is_zero and b.is_zero:
        if a.sign is b.sign:
            return a
        return NEG_ZERO if rm is RoundingMode.TOWARD_NEGATIVE else POS_ZERO
    # x + (+-0) = x for nonzero x
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    r = a.to_float() + b.to_float()
    if r == 0.0:
        return NEG_ZERO if rm is RoundingMode.TOWARD_NEGATIVE else POS_ZERO
    return SzValue.from_float(r)


def sub(a: SzValue, b: SzValue, rm: RoundingMode = RoundingMode.TO_NEAREST) -> SzValue:
    return add(a, neg(b), rm)


def mul(a: SzValue, b: SzValue) -> SzValue:
    if a.is_nan or b.is_nan:
        return NAN
    if (a.is_zero and b.is_inf) or (a.is_inf and b.is_zero):
        return NAN
    sign = a.sign.xor(b.sign)
    if a.is_inf or b.is_inf:
        return SzValue.inf(sign)
    if a.is_zero or b.is_zero:
        return SzValue.zero(sign)
    return SzValue.from_float(a.to_float() * b.to_float())


def div(a: SzValue, b: SzValue) -> SzValue:
    if a.is_nan or b.is_nan:
        return NAN
    if (a.is_zero and b.is_zero) or (a.is_inf and b.is_inf):
        return NAN
    sign = a.sign.xor(b.sign)
    if a.is_inf or b.is_zero:
        return SzValue.inf(sign)
    if b.is_inf or a.is_zero:
        return SzValue.zero(sign)
    return SzValue.from_float(a.to_float() / b.to_float())


def sqrt(a: SzValue) -> SzValue:
    if a.is_nan:
        return NAN
    if a.is_zero:
        return a
    if a.sign is Sign.NEGATIVE:
        return NAN
    if a.is_inf:
        return a
    return SzValue.from_float(math.sqrt(a.magnitude))


def reciprocal(a: SzValue) -> SzValue:
    return div(ONE, a)


def copysign(magnitude_source: SzValue, sign_source: SzValue) -> SzValue:
    if magnitude_source.is_nan:
        return NAN
    return SzValue(magnitude_source.kind, sign_source.sign, magnitude_source.magnitude)


def sign_bit(a: SzValue) -> Sign:
    return a.sign


def numeric_eq(a: SzValue, b: SzValue) -> bool:
    if a.is_nan or b.is_nan:
        return False
    if a.is_zero and b.is_zero:
        return True
    return a == b


def same_repr(a: SzValue, b: SzValue) -> bool:
    """Bit-pattern identity; all NaNs share one canonical pattern."""
    return a == b


def encode_bits(a: SzValue) -> int:
    if a.is_nan:
        return CANONICAL_NAN_BITS
    return int.from_bytes(struct.pack(">d", a.to_float()), "big")


def decode_bits(bits: int) -> SzValue:
    if not 0 <= bits < 1 << 64:
        raise ValueError(f"not a 64-bit pattern: {bits:#x}")
    if bits & EXP_MASK == 0 and bits & FRAC_MASK:
        raise UnsupportedClassError(f"subnormal pattern {format_bits(bits)} is not modeled")
    return SzValue.from_float(struct.unpack(">d", bits.to_bytes(8, "big"))[0])


def format_bits(bits: int) -> str:
    return f"{bits:016x}"

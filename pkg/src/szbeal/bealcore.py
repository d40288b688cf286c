"""Exact adjudication of claimed solutions to A^x + B^y = C^z.

Everything here is integer arithmetic.  Zero bases may carry a sign (``+0`` /
``-0``) or none (bare ``0``); the sign never affects magnitudes, only whether a
base counts as a "positive integer" under the chosen policy.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping

from .szval import Sign

MAX_RESULT_DIGITS = 10**6


class PowerTooLarge(ValueError):
    """Refusal: an exact power would exceed the digit guard."""


@dataclass(frozen=True)
class IntValue:
    magnitude: int
    zero_sign: Sign | None = None

    def __post_init__(self):
        if isinstance(self.magnitude, bool) or not isinstance(self.magnitude, int):
            raise TypeError(f"magnitude must be an int, got {self.magnitude!r}")
        if self.magnitude < 0:
            raise ValueError("negative bases are not representable")
        if self.magnitude != 0 and self.zero_sign is not None:
            raise ValueError("only a zero magnitude carries a zero sign")

    @classmethod
    def parse(cls, text: str | int) -> IntValue:
        if isinstance(text, int) and not isinstance(text, bool):
            return cls(text)
        t = str(text).strip()
        if t == "+0":
            return cls(0, Sign.POSITIVE)
        if t == "-0":
            return cls(0, Sign.NEGATIVE)
        digits = t[1:] if t.startswith("+") else t
        if not digits.isdecimal() or not digits.isascii():
            raise ValueError(f"not a non-negative integer: {text!r}")
        value = int(digits)
        if t.startswith("+") and value == 0:
            return cls(0, Sign.POSITIVE)
        if value == 0 and len(digits) > 1:
            raise ValueError(f"ambiguous zero spelling: {text!r}")
        return cls(value)

    def __str__(self) -> str:
        if self.magnitude == 0 and self.zero_sign is not None:
            return self.zero_sign.value + "0"
        return str(self.magnitude)


class Policy(enum.Enum):
    """What counts as a "positive integer" base."""

    STRICT = "strict"
    ZERO_INCLUSIVE = "zero-inclusive"
    SIGNED_ZERO_INCLUSIVE = "signed-zero"

    def admits(self, v: IntValue) -> bool:
        if v.magnitude >= 1:
            return True
        if self is Policy.ZERO_INCLUSIVE:
            return True
        if self is Policy.SIGNED_ZERO_INCLUSIVE:
            return v.zero_sign is Sign.POSITIVE
        return False

    @classmethod
    def parse(cls, name: str) -> Policy:
        key = name.strip().lower().replace("_", "-")
        aliases = {"signed-zero-inclusive": "signed-zero", "zero": "zero-inclusive"}
        return cls(aliases.get(key, key))


def pow_exact(base: IntValue, exp: int) -> IntValue:
    if exp < 1:
        raise ValueError(f"exponent must be >= 1, got {exp}")
    m = base.magnitude
    if m == 0:
        if base.zero_sign is Sign.NEGATIVE and exp % 2 == 1:
            return IntValue(0, Sign.NEGATIVE)
        return IntValue(0, None if base.zero_sign is None else Sign.POSITIVE)
    if m > 1 and exp * math.log10(m) > MAX_RESULT_DIGITS:
        raise PowerTooLarge(f"{m}^{exp} would exceed {MAX_RESULT_DIGITS} decimal digits")
    return IntValue(m ** exp)


def factorize(n: int) -> list[int]:
    """Prime factors of ``n`` with multiplicity, ascending, by trial division."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    while n % 2 == 0:
        out.append(2)
        n //= 2
    d = 3
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out


def common_prime_factor(a: IntValue, b: IntValue, c: IntValue) -> int | None:
    """Smallest prime dividing all three magnitudes; every prime divides 0.

    Returns None when the gcd is 1, and also for the all-zero triple (use
    :func:`all_zero` to tell the two apart).
    """
    g = math.gcd(a.magnitude, b.magnitude, c.magnitude)
    if g <= 1:
        return None
    return factorize(g)[0]


def all_zero(*values: IntValue) -> bool:
    return all(v.magnitude == 0 for v in values)


@dataclass(frozen=True)
class BealClaim:
    A: IntValue
    B: IntValue
    C: IntValue
    x: int
    y: int
    z: int

    def __post_init__(self):
        for name in "xyz":
            e = getattr(self, name)
            if isinstance(e, bool) or not isinstance(e, int) or e < 1:
                raise ValueError(f"exponent {name} must be a natural number >= 1, got {e!r}")

    @classmethod
    def of(cls, A, B, C, x, y, z) -> BealClaim:
        return cls(IntValue.parse(A), IntValue.parse(B), IntValue.parse(C), int(x), int(y), int(z))

    def __str__(self):
        return f"A={self.A} B={self.B} C={self.C} x={self.x} y={self.y} z={self.z}"


class Classification(enum.Enum):
    INVALID = "Invalid"
    CONJECTURE_CONSISTENT = "ConjectureConsistent"
    COUNTEREXAMPLE_CANDIDATE = "CounterexampleCandidate"


@dataclass(frozen=True)
class VerdictReport:
    claim: BealClaim
    policy: Policy
    exponents_valid: bool
    base_admissible: dict[str, bool]
    equation_holds: bool
    lhs: int
    rhs: int
    common_prime_factor: int | None
    all_bases_zero: bool
    classification: Classification = field(init=False)

    def __post_init__(self):
        if self.equation_holds and self.exponents_valid and self.bases_admissible:
            cls = (Classification.COUNTEREXAMPLE_CANDIDATE if self.common_prime_factor is None
                   else Classification.CONJECTURE_CONSISTENT)
        else:
            cls = Classification.INVALID
        object.__setattr__(self, "classification", cls)

    @property
    def bases_admissible(self) -> bool:
        return all(self.base_admissible.values())

    def reasons(self) -> list[str]:
        out = []
        if not self.exponents_valid:
            bad = [f"{n}={getattr(self.claim, n)}" for n in "xyz" if getattr(self.claim, n) <= 2]
            out.append(f"exponent {', '.join(bad)} not > 2")
        for name, ok in self.base_admissible.items():
            if not ok:
                out.append(f"{name}={getattr(self.claim, name)} not admissible")
        if not self.equation_holds:
            out.append(f"equation fails ({self.lhs} != {self.rhs})")
        return out

    def summary(self) -> str:
        if self.classification is Classification.INVALID:
            return f"Invalid: {'; '.join(self.reasons())}"
        if self.classification is Classification.CONJECTURE_CONSISTENT:
            return f"ConjectureConsistent, common prime {self.common_prime_factor}"
        note = " (all bases zero: every prime divides)" if self.all_bases_zero else ""
        return f"CounterexampleCandidate, no common prime factor{note}"

    def to_record(self) -> dict:
        c = self.claim
        return {
            "A": str(c.A), "B": str(c.B), "C": str(c.C), "x": c.x, "y": c.y, "z": c.z,
            "policy": self.policy.value,
            "exponents_valid": self.exponents_valid,
            "base_admissible": dict(self.base_admissible),
            "bases_admissible": self.bases_admissible,
            "equation_holds": self.equation_holds,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "common_prime_factor": self.common_prime_factor,
            "all_bases_zero": self.all_bases_zero,
            "classification": self.classification.value,
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> VerdictReport:
        report = cls(
            claim=BealClaim.of(rec["A"], rec["B"], rec["C"], rec["x"], rec["y"], rec["z"]),
            policy=Policy(rec["policy"]),
            exponents_valid=rec["exponents_valid"],
            base_admissible=dict(rec["base_admissible"]),
            equation_holds=rec["equation_holds"],
            lhs=int(rec["lhs"]),
            rhs=int(rec["rhs"]),
            common_prime_factor=rec["common_prime_factor"],
            all_bases_zero=rec["all_bases_zero"],
        )
        if report.classification.value != rec["classification"]:
            raise ValueError("record classification is inconsistent with its checks")
        return report


def adjudicate(claim: BealClaim, policy: Policy = Policy.STRICT) -> VerdictReport:
    exponents_valid = all(e > 2 for e in (claim.x, claim.y, claim.z))
    admissible = {name: policy.admits(getattr(claim, name)) for name in "ABC"}
    lhs = pow_exact(claim.A, claim.x).magnitude + pow_exact(claim.B, claim.y).magnitude
    rhs = pow_exact(claim.C, claim.z).magnitude
    return VerdictReport(
        claim=claim,
        policy=policy,
        exponents_valid=exponents_valid,
        base_admissible=admissible,
        equation_holds=lhs == rhs,
        lhs=lhs,
        rhs=rhs,
        common_prime_factor=common_prime_factor(claim.A, claim.B, claim.C),
        all_bases_zero=all_zero(claim.A, claim.B, claim.C),
    )

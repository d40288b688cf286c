"""The signed-zero rule table, evaluated by the model and by host hardware."""

from __future__ import annotations

from dataclasses import dataclass

from . import host
from .rewrite import eval_expr, parse_expr
from .szval import RoundingMode, SzValue, parse_value, same_repr

X = parse_value("3")

# (label, expression, expected under to-nearest, expected under toward-negative,
#  depends on rounding mode)
RULES: list[tuple[str, str, str, str, bool]] = [
    ("(-0) / |x|", "(-0) / x", "-0", "-0", False),
    ("(-0) * (-0)", "(-0) * (-0)", "+0", "+0", False),
    ("x + (+0)", "x + (+0)", "3", "3", False),
    ("x + (-0)", "x + (-0)", "3", "3", False),
    ("(-0) + (-0)", "(-0) + (-0)", "-0", "-0", False),
    ("(-0) - (+0)", "(-0) - (+0)", "-0", "-0", False),
    ("(+0) + (+0)", "(+0) + (+0)", "+0", "+0", False),
    ("(+0) - (-0)", "(+0) - (-0)", "+0", "+0", False),
    ("x - x", "x - x", "+0", "-0", True),
    ("x + (-x)", "x + (-x)", "+0", "-0", True),
    ("sqrt(-0)", "sqrt(-0)", "-0", "-0", False),
    ("(-0) / (-inf)", "(-0) / (-inf)", "+0", "+0", False),
    ("|x| / (-0)", "x / (-0)", "-inf", "-inf", False),
    ("(+0) * (+inf)", "(+0) * inf", "nan", "nan", False),
    ("(+0) * (-inf)", "(+0) * (-inf)", "nan", "nan", False),
    ("(-0) * (+inf)", "(-0) * inf", "nan", "nan", False),
    ("(-0) * (-inf)", "(-0) * (-inf)", "nan", "nan", False),
    ("(+0) / (+0)", "(+0) / (+0)", "nan", "nan", False),
    ("(+0) / (-0)", "(+0) / (-0)", "nan", "nan", False),
    ("(-0) / (+0)", "(-0) / (+0)", "nan", "nan", False),
    ("(-0) / (-0)", "(-0) / (-0)", "nan", "nan", False),
    ("1 / (+0)", "1 / (+0)", "+inf", "+inf", False),
    ("1 / (-0)", "1 / (-0)", "-inf", "-inf", False),
]


@dataclass(frozen=True)
class Row:
    label: str
    model: SzValue
    expected: SzValue
    host: SzValue | None

    @property
    def ok(self) -> bool:
        return same_repr(self.model, self.expected) and (
            self.host is None or same_repr(self.model, self.host))

    def __str__(self):
        text = f"{self.label} = {self.model} [model]"
        if self.host is None:
            text += " (host: n/a)"
        else:
            text += f" {self.host} [host]"
        if not same_repr(self.model, self.expected):
            return text + f" MISMATCH (table says {self.expected})"
        if self.host is not None:
            text += " OK" if self.ok else " DISAGREE"
        return text

    def to_record(self) -> dict:
        return {"rule": self.label, "model": str(self.model), "expected": str(self.expected),
                "host": None if self.host is None else str(self.host), "ok": self.ok}


def semantics_table(rm: RoundingMode = RoundingMode.TO_NEAREST) -> list[Row]:
    env = {"x": X}
    rows = []
    for label, text, near, toward_neg, mode_sensitive in RULES:
        e = parse_expr(text)
        expected = parse_value(near if rm is RoundingMode.TO_NEAREST else toward_neg)
        # the host FPU runs round-to-nearest only
        checkable = rm is RoundingMode.TO_NEAREST or not mode_sensitive
        rows.append(Row(label, eval_expr(e, env, rm), expected,
                        host.eval_expr(e, env) if checkable else None))
    return rows

"""Domain-exhaustive legality checking for floating-point expression rewrites.

A rewrite ``lhs => rhs`` is *legal* over a finite test domain when every
assignment of domain values to its variables makes both sides evaluate to the
same bit pattern (all NaNs count as one pattern).  Numeric equality is not
enough: ``+0 == -0`` numerically, yet the two zeros behave differently under
division, so a rewrite that swaps one for the other changes program output.
"""

from __future__ import annotations

import enum
import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from . import szval
from .szval import RoundingMode, SzValue

MAX_ASSIGNMENTS = 10**7


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: SzValue


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Sqrt:
    arg: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


Expr = Union[Var, Const, Neg, Sqrt, Add, Sub, Mul, Div]

_BINARY = {Add: "+", Sub: "-", Mul: "*", Div: "/"}


class UnboundVariableError(KeyError):
    pass


class RewriteParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position + 1}\n  {text}\n  {' ' * position}^")


class TooManyAssignments(ValueError):
    pass


def render(e: Expr) -> str:
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Const):
        text = str(e.value)
        return f"({text})" if text.startswith(("-", "+")) else text
    if isinstance(e, Neg):
        return f"-{_render_operand(e.arg)}"
    if isinstance(e, Sqrt):
        return f"sqrt({render(e.arg)})"
    return f"{_render_operand(e.left)} {_BINARY[type(e)]} {_render_operand(e.right)}"


def _render_operand(e: Expr) -> str:
    if isinstance(e, (Var, Const, Sqrt)):
        return render(e)
    return f"({render(e)})"


def free_variables(e: Expr) -> list[str]:
    """Variable names in order of first appearance."""
    out: list[str] = []

    def walk(node):
        if isinstance(node, Var):
            if node.name not in out:
                out.append(node.name)
        elif isinstance(node, (Neg, Sqrt)):
            walk(node.arg)
        elif not isinstance(node, Const):
            walk(node.left)
            walk(node.right)

    walk(e)
    return out


def eval_expr(e: Expr, env: Mapping[str, SzValue],
              rm: RoundingMode = RoundingMode.TO_NEAREST) -> SzValue:
    if isinstance(e, Var):
        try:
            return env[e.name]
        except KeyError:
            raise UnboundVariableError(f"unbound variable {e.name!r}") from None
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Neg):
        return szval.neg(eval_expr(e.arg, env, rm))
    if isinstance(e, Sqrt):
        return szval.sqrt(eval_expr(e.arg, env, rm))
    a = eval_expr(e.left, env, rm)
    b = eval_expr(e.right, env, rm)
    if isinstance(e, Add):
        return szval.add(a, b, rm)
    if isinstance(e, Sub):
        return szval.sub(a, b, rm)
    if isinstance(e, Mul):
        return szval.mul(a, b)
    if isinstance(e, Div):
        return szval.div(a, b)
    raise TypeError(f"not an expression node: {e!r}")


# --- surface syntax -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
                    r"|(?P<name>[A-Za-z_]\w*)|(?P<op>=>|[-+*/()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            while text[pos].isspace():
                pos += 1
            raise RewriteParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        what = f"{tok[1]!r}" if tok[0] != "end" else "end of input"
        raise RewriteParseError(f"{message}, found {what}", self.text, tok[2])

    def expect(self, value):
        if self.peek()[1] != value or self.peek()[0] == "end":
            self.fail(f"expected {value!r}")
        return self.take()

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.unary()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def unary(self) -> Expr:
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.take()
            arg = self.unary()
            # a negated literal is itself a literal: "-0" is the constant -0
            if isinstance(arg, Const):
                return Const(szval.neg(arg.value))
            return Neg(arg)
        if kind == "op" and value == "+":
            self.take()
            return self.unary()
        return self.primary()

    def primary(self) -> Expr:
        tok = self.peek()
        kind, value, _ = tok
        if kind == "num":
            self.take()
            return Const(szval.parse_value(value))
        if kind == "name":
            self.take()
            low = value.lower()
            if low in ("inf", "infinity"):
                return Const(szval.POS_INF)
            if low == "nan":
                return Const(szval.NAN)
            if low == "sqrt":
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Sqrt(arg)
            return Var(value)
        if kind == "op" and value == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        self.fail("expected an operand")


def parse_expr(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "end":
        p.fail("unexpected token")
    return node


# --- rules and verdicts ---------------------------------------------------

@dataclass(frozen=True)
class RewriteRule:
    lhs: Expr
    rhs: Expr
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        found = free_variables(self.lhs)
        found += [v for v in free_variables(self.rhs) if v not in found]
        if not self.variables:
            object.__setattr__(self, "variables", tuple(found))
        else:
            undeclared = [v for v in found if v not in self.variables]
            if undeclared:
                raise ValueError(f"undeclared variables: {', '.join(undeclared)}")

    def __str__(self):
        return f"{render(self.lhs)} => {render(self.rhs)}"


def parse_rule(text: str) -> RewriteRule:
    """Parse ``LHS => RHS``; variables are ordered by first appearance."""
    parts = text.split("=>")
    if len(parts) != 2:
        pos = text.find("=>", text.find("=>") + 2) if len(parts) > 2 else len(text)
        raise RewriteParseError("a rule needs exactly one '=>'", text, pos)
    offset = len(parts[0]) + 2
    lhs = parse_expr(parts[0])
    try:
        rhs = parse_expr(parts[1])
    except RewriteParseError as exc:
        raise RewriteParseError(exc.message, text,
                                exc.position + offset) from None
    return RewriteRule(lhs, rhs)


class Status(enum.Enum):
    LEGAL = "Legal"
    ILLEGAL = "Illegal"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: dict[str, SzValue] | None = None
    lhs_value: SzValue | None = None
    rhs_value: SzValue | None = None

    @property
    def legal(self) -> bool:
        return self.status is Status.LEGAL

    def to_record(self) -> dict:
        rec = {"status": self.status.value}
        if self.witness is not None:
            rec["witness"] = {k: str(v) for k, v in self.witness.items()}
            rec["lhs_value"] = str(self.lhs_value)
            rec["rhs_value"] = str(self.rhs_value)
        return rec

    @classmethod
    def from_record(cls, rec: Mapping) -> Verdict:
        status = Status(rec["status"])
        if status is Status.LEGAL:
            return cls(status)
        return cls(status,
                   {k: szval.parse_value(v) for k, v in rec["witness"].items()},
                   szval.parse_value(rec["lhs_value"]),
                   szval.parse_value(rec["rhs_value"]))

    def __str__(self):
        if self.legal:
            return "Legal"
        w = " ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"Illegal; witness {w}; lhs={self.lhs_value} rhs={self.rhs_value}"


# Nonzero finites lead so that the first witness of a sign-of-zero bug is an
# ordinary number (x=1, y=1) rather than a zero input.
DEFAULT_DOMAIN: tuple[SzValue, ...] = tuple(szval.parse_value(s) for s in
                                            ("1", "-1", "2.5", "-2.5", "+0", "-0",
                                             "+inf", "-inf", "nan"))


def _first_witness(rule: RewriteRule, domain: Sequence[SzValue], rm: RoundingMode,
                   prefix: tuple[int, ...]):
    n_free = len(rule.variables) - len(prefix)
    for tail in itertools.product(range(len(domain)), repeat=n_free):
        idx = prefix + tail
        env = {name: domain[i] for name, i in zip(rule.variables, idx)}
        lv = eval_expr(rule.lhs, env, rm)
        rv = eval_expr(rule.rhs, env, rm)
        if not szval.same_repr(lv, rv):
            return idx, lv, rv
    return None


def check_rewrite(rule: RewriteRule, domain: Sequence[SzValue] = DEFAULT_DOMAIN,
                  rm: RoundingMode = RoundingMode.TO_NEAREST, workers: int = 1) -> Verdict:
    """Enumerate every assignment of ``domain`` to the rule's variables.

    Returns the lexicographically first distinguishing assignment (variables
    in declared order, values in domain order).  With ``workers > 1`` the
    space is split on the first variable; the witness is the same.
    """
    domain = tuple(domain)
    if not domain:
        raise ValueError("domain must be non-empty")
    total = len(domain) ** len(rule.variables)
    if total > MAX_ASSIGNMENTS:
        raise TooManyAssignments(
            f"{len(domain)}^{len(rule.variables)} = {total} assignments exceeds {MAX_ASSIGNMENTS}")

    if workers > 1 and rule.variables:
        prefixes = [(i,) for i in range(len(domain))]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(_first_witness, itertools.repeat(rule),
                                  itertools.repeat(domain), itertools.repeat(rm), prefixes))
        hit = next((f for f in found if f is not None), None)
    else:
        hit = _first_witness(rule, domain, rm, ())

    if hit is None:
        return Verdict(Status.LEGAL)
    idx, lv, rv = hit
    witness = {name: domain[i] for name, i in zip(rule.variables, idx)}
    return Verdict(Status.ILLEGAL, witness, lv, rv)


def replays(rule: RewriteRule, verdict: Verdict,
            rm: RoundingMode = RoundingMode.TO_NEAREST) -> bool:
    """True when an Illegal verdict's witness really distinguishes the two sides."""
    if verdict.legal:
        return False
    lv = eval_expr(rule.lhs, verdict.witness, rm)
    rv = eval_expr(rule.rhs, verdict.witness, rm)
    return (not szval.same_repr(lv, rv)
            and szval.same_repr(lv, verdict.lhs_value)
            and szval.same_repr(rv, verdict.rhs_value))

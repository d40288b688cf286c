"""Host binary64 reference: the same operations computed by the FPU via numpy.

Used by the semantics table and by differential tests.  Results come back as
:class:`SzValue` so they compare directly against the model.
"""

from __future__ import annotations

import numpy as np

from . import rewrite
from .szval import SzValue

_f = np.float64


def _lift(op):
    def wrapped(*args: SzValue) -> SzValue:
        with np.errstate(all="ignore"):
            r = op(*(_f(a.to_float()) for a in args))
        return SzValue.from_float(float(r))
    wrapped.__name__ = op.__name__
    return wrapped


add = _lift(np.add)
sub = _lift(np.subtract)
mul = _lift(np.multiply)
div = _lift(np.divide)
sqrt = _lift(np.sqrt)
neg = _lift(np.negative)
copysign = _lift(np.copysign)


def reciprocal(a: SzValue) -> SzValue:
    return div(SzValue.from_float(1.0), a)


_BINARY = {rewrite.Add: add, rewrite.Sub: sub, rewrite.Mul: mul, rewrite.Div: div}


def eval_expr(e: rewrite.Expr, env) -> SzValue:
    """Evaluate an expression tree on the host FPU (round-to-nearest only)."""
    if isinstance(e, rewrite.Var):
        return env[e.name]
    if isinstance(e, rewrite.Const):
        return e.value
    if isinstance(e, rewrite.Neg):
        return neg(eval_expr(e.arg, env))
    if isinstance(e, rewrite.Sqrt):
        return sqrt(eval_expr(e.arg, env))
    return _BINARY[type(e)](eval_expr(e.left, env), eval_expr(e.right, env))

"""Exit criteria.  Each test carries a ``criterion`` marker; a summary with
one PASS/FAIL line per criterion is printed at the end of the run."""

import time

import pytest

from szbeal import host, szval
from szbeal.bealcore import (BealClaim, Classification, IntValue, Policy, adjudicate,
                             factorize, pow_exact)
from szbeal.rewrite import check_rewrite, eval_expr, parse_rule, replays
from szbeal.search import SearchBounds, search_solutions
from szbeal.szval import NEG_INF, NEG_ZERO, POS_INF, POS_ZERO, RoundingMode, parse_value as v

from conftest import SPECIAL_SET, random_finite_pairs


def same(a, b):
    return szval.same_repr(a, b)


# 1 -----------------------------------------------------------------------------

C1 = pytest.mark.criterion(1, "rule-table conformance, < 1 s")


@C1
def test_rule_table_conformance():
    start = time.perf_counter()
    x, TN = v("3"), RoundingMode.TOWARD_NEGATIVE
    checks = {
        "-0/|x| = -0": same(szval.div(NEG_ZERO, x), NEG_ZERO),
        "(-0)(-0) = +0": same(szval.mul(NEG_ZERO, NEG_ZERO), POS_ZERO),
        "x + (+-0) = x": all(same(szval.add(x, z), x) for z in (POS_ZERO, NEG_ZERO)),
        "(-0)+(-0) = (-0)-(+0) = -0": same(szval.add(NEG_ZERO, NEG_ZERO), NEG_ZERO)
        and same(szval.sub(NEG_ZERO, POS_ZERO), NEG_ZERO),
        "(+0)+(+0) = (+0)-(-0) = +0": same(szval.add(POS_ZERO, POS_ZERO), POS_ZERO)
        and same(szval.sub(POS_ZERO, NEG_ZERO), POS_ZERO),
        "x-x = x+(-x) = +0, -0 toward negative":
            same(szval.sub(x, x), POS_ZERO) and same(szval.add(x, szval.neg(x)), POS_ZERO)
            and same(szval.sub(x, x, TN), NEG_ZERO) and same(szval.add(x, szval.neg(x), TN), NEG_ZERO),
        "sqrt(-0) = -0": same(szval.sqrt(NEG_ZERO), NEG_ZERO),
        "-0/-inf = +0": same(szval.div(NEG_ZERO, NEG_INF), POS_ZERO),
        "|x|/-0 = -inf": same(szval.div(x, NEG_ZERO), NEG_INF),
        "+-0 x +-inf = NaN": all(szval.mul(z, i).is_nan for z in (POS_ZERO, NEG_ZERO)
                                 for i in (POS_INF, NEG_INF)),
        "+-0/+-0 = NaN": all(szval.div(a, b).is_nan for a in (POS_ZERO, NEG_ZERO)
                             for b in (POS_ZERO, NEG_ZERO)),
        "1/(+0) = +inf, 1/(-0) = -inf": same(szval.reciprocal(POS_ZERO), POS_INF)
        and same(szval.reciprocal(NEG_ZERO), NEG_INF),
    }
    elapsed = time.perf_counter() - start
    assert [k for k, ok in checks.items() if not ok] == []
    assert elapsed < 1.0


# 2 -----------------------------------------------------------------------------

C2 = pytest.mark.criterion(2, "differential conformance vs host binary64, < 10 s")

BINARY = [(szval.add, host.add), (szval.sub, host.sub), (szval.mul, host.mul),
          (szval.div, host.div), (szval.copysign, host.copysign)]
UNARY = [(szval.sqrt, host.sqrt), (szval.neg, host.neg)]


def agrees(model, hw):
    if model.is_nan or hw.is_nan:
        return model.is_nan and hw.is_nan
    return szval.encode_bits(model) == szval.encode_bits(hw)


@C2
def test_differential_conformance():
    start = time.perf_counter()
    special_pairs = [(a, b) for a in SPECIAL_SET for b in SPECIAL_SET]
    assert len(special_pairs) == 81
    random_pairs = random_finite_pairs(10_000)
    disagreements = []
    for a, b in special_pairs + random_pairs:
        for model_op, host_op in BINARY:
            if not agrees(model_op(a, b), host_op(a, b)):
                disagreements.append((model_op.__name__, str(a), str(b)))
        for operand in (a, b):
            for model_op, host_op in UNARY:
                if not agrees(model_op(operand), host_op(operand)):
                    disagreements.append((model_op.__name__, str(operand)))
    elapsed = time.perf_counter() - start
    assert disagreements == []
    assert elapsed < 10.0


# 3 -----------------------------------------------------------------------------

C3 = pytest.mark.criterion(3, "rewrite verdicts with replaying witnesses")

ONE = v("1")


@C3
@pytest.mark.parametrize("text", ["-(x-y) => y-x", "(-x)-(-y) => y-x"])
def test_forbidden_rewrites_are_illegal_with_equal_operands(text):
    rule = parse_rule(text)
    verdict = check_rewrite(rule)
    assert not verdict.legal, f"{text} judged Legal over the default domain"
    assert same(verdict.witness["x"], verdict.witness["y"])
    assert replays(rule, verdict)


@C3
def test_plus_zero_rewrite_is_illegal_at_negative_zero():
    rule = parse_rule("x+(+0) => x")
    verdict = check_rewrite(rule)
    assert not verdict.legal
    assert verdict.witness == {"x": NEG_ZERO}
    assert replays(rule, verdict)


@C3
def test_double_negation_is_legal():
    rule = parse_rule("-(-x) => x")
    assert check_rewrite(rule).legal


# 4 -----------------------------------------------------------------------------

C4 = pytest.mark.criterion(4, "1^3 + (+0)^4 = 1^5 fixture")


@C4
def test_finishing_blow_fixture():
    claim = BealClaim(IntValue(1), IntValue(0, szval.Sign.POSITIVE), IntValue(1), 3, 4, 5)
    szi = adjudicate(claim, Policy.SIGNED_ZERO_INCLUSIVE)
    assert szi.equation_holds and szi.lhs == szi.rhs == 1
    assert szi.common_prime_factor is None and not szi.all_bases_zero
    assert szi.classification is Classification.COUNTEREXAMPLE_CANDIDATE
    strict = adjudicate(claim, Policy.STRICT)
    assert strict.classification is Classification.INVALID
    assert strict.base_admissible["B"] is False
    assert adjudicate(claim, Policy.SIGNED_ZERO_INCLUSIVE) == szi
    assert adjudicate(claim, Policy.STRICT) == strict


# 5 -----------------------------------------------------------------------------

C5 = pytest.mark.criterion(5, "N=100, K=7 search: no violations, recall, re-verify, < 60 s")


@C5
def test_conjecture_consistency_search():
    start = time.perf_counter()
    result = search_solutions(SearchBounds(100, 7))
    elapsed = time.perf_counter() - start
    assert result.violations == ()
    keys = {s.key for s in result.solutions}
    assert {(2, 2, 2, 3, 3, 4), (3, 6, 3, 3, 3, 5), (7, 7, 14, 3, 4, 3)} <= keys
    for s in result.solutions:
        r = adjudicate(BealClaim.of(*s.key), Policy.STRICT)
        assert r.classification is Classification.CONJECTURE_CONSISTENT
        assert r.common_prime_factor == s.common_prime
    assert elapsed < 60.0


# 6 -----------------------------------------------------------------------------

C6 = pytest.mark.criterion(6, "pow_exact and factorize oracle equivalence, < 30 s")


def naive_trial_division(n):
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@C6
def test_oracle_equivalence():
    start = time.perf_counter()
    for base in range(0, 11):
        for n in range(1, 11):
            product = 1
            for _ in range(n):
                product *= base
            assert pow_exact(IntValue(base), n).magnitude == product
    for n in range(1, 10**5 + 1):
        fs = factorize(n)
        prod = 1
        for p in fs:
            prod *= p
        assert prod == n
        assert fs == naive_trial_division(n)
    assert time.perf_counter() - start < 30.0

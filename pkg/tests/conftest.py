import random
import struct

from hypothesis import strategies as st

from szbeal import szval
from szbeal.szval import SzValue

SPECIAL_SET = [szval.parse_value(s) for s in
               ("+0", "-0", "+inf", "-inf", "nan", "1", "-1", "2.5", "-2.5")]


def from_bits(bits):
    return struct.unpack(">d", bits.to_bytes(8, "big"))[0]


def random_normal(rng, max_unbiased_exp=500):
    """A random binary64 with |unbiased exponent| <= max_unbiased_exp.

    Keeping exponents well inside the normal range means no product,
    quotient or sum of two such values can land in the subnormal range.
    """
    sign = rng.getrandbits(1)
    exp = 1023 + rng.randint(-max_unbiased_exp, max_unbiased_exp)
    frac = rng.getrandbits(52)
    return from_bits((sign << 63) | (exp << 52) | frac)


def random_finite_pairs(n, seed=20150106):
    rng = random.Random(seed)
    pairs = []
    for i in range(n):
        a = random_normal(rng)
        # every fourth pair cancels exactly to exercise the zero-sign path
        b = -a if i % 4 == 0 else random_normal(rng)
        pairs.append((SzValue.from_float(a), SzValue.from_float(b)))
    return pairs


normal_floats = st.floats(allow_nan=False, allow_infinity=False,
                          min_value=-2.0**500, max_value=2.0**500).filter(
    lambda f: f == 0.0 or abs(f) >= 2.0**-500)

szvalues = st.one_of(st.sampled_from(SPECIAL_SET), normal_floats.map(SzValue.from_float))


# --- acceptance reporting ---------------------------------------------------

_criteria: dict[int, list[tuple[str, str, float]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", m.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" in props and (report.when == "call" or report.outcome != "passed"):
        n, title = props["criterion"]
        _criteria.setdefault(n, [title])
        _criteria[n].append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, *runs = _criteria[n]
        ok = all(outcome == "passed" for _, outcome, _ in runs)
        seconds = sum(d for _, _, d in runs)
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {title} ({seconds:.2f}s)")
        for name, outcome, _ in runs:
            if outcome != "passed":
                terminalreporter.write_line(f"         {outcome}: {name}")

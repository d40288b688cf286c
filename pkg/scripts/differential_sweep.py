"""Compare the signed-zero model with host binary64 on many random pairs.

    python scripts/differential_sweep.py --pairs 1000000 --seed 1
"""

import argparse
import random
import struct
import time
from collections import Counter

from szbeal import host, szval
from szbeal.szval import SzValue

OPS = {
    "add": (szval.add, host.add), "sub": (szval.sub, host.sub),
    "mul": (szval.mul, host.mul), "div": (szval.div, host.div),
    "copysign": (szval.copysign, host.copysign),
}
UNARY = {"sqrt": (szval.sqrt, host.sqrt), "neg": (szval.neg, host.neg)}


def draw(rng, spread):
    bits = (rng.getrandbits(1) << 63) | ((1023 + rng.randint(-spread, spread)) << 52) | rng.getrandbits(52)
    return SzValue.from_float(struct.unpack(">d", bits.to_bytes(8, "big"))[0])


def same(a, b):
    return (a.is_nan and b.is_nan) or szval.encode_bits(a) == szval.encode_bits(b)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--spread", type=int, default=500, help="max |unbiased exponent|")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = Counter()
    start = time.perf_counter()
    for _ in range(args.pairs):
        a, b = draw(rng, args.spread), draw(rng, args.spread)
        if rng.random() < 0.25:
            b = szval.neg(a)
        for name, (m, h) in OPS.items():
            bad[name] += not same(m(a, b), h(a, b))
        for name, (m, h) in UNARY.items():
            bad[name] += not same(m(a), h(a))
    print(f"{args.pairs} pairs in {time.perf_counter() - start:.1f}s")
    for name in [*OPS, *UNARY]:
        print(f"  {name:9s} disagreements: {bad[name]}")


if __name__ == "__main__":
    main()

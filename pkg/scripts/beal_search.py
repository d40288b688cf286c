"""Time the bounded Beal search over a grid of bounds.

    python scripts/beal_search.py --max-base 200 --max-exp 9 --workers 4
"""

import argparse
import time

from szbeal.search import SearchBounds, search_solutions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-base", type=int, default=100)
    ap.add_argument("--max-exp", type=int, default=7)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    for n in sorted({10, 25, 50, args.max_base}):
        if n > args.max_base:
            continue
        bounds = SearchBounds(n, args.max_exp)
        start = time.perf_counter()
        result = search_solutions(bounds, workers=args.workers)
        dt = time.perf_counter() - start
        primes = sorted({s.common_prime for s in result.solutions if s.common_prime})
        print(f"N={n:4d} K={args.max_exp}: {len(result.solutions):5d} solutions, "
              f"{len(result.violations)} violations, common primes {primes[:8]}"
              f"{'...' if len(primes) > 8 else ''} ({dt:.2f}s)")


if __name__ == "__main__":
    main()

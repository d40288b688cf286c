"""Bounded exhaustive search for A^x + B^y = C^z with all exponents >= 3.

All powers base^exp with base <= N and 3 <= exp <= K go into a hash table
keyed by value; each pair of table entries is summed and the sum probed in
the table.  Every hit is checked for a common prime factor of A, B, C.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

from .bealcore import IntValue, common_prime_factor

MIN_EXPONENT = 3
MAX_TABLE_ENTRIES = 10**7


class TableTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    max_base: int
    max_exponent: int

    def __post_init__(self):
        if self.max_base < 1:
            raise ValueError(f"max_base must be >= 1, got {self.max_base}")
        if self.max_exponent < MIN_EXPONENT:
            raise ValueError(f"max_exponent must be >= {MIN_EXPONENT}, got {self.max_exponent}")

    @property
    def table_entries(self) -> int:
        return self.max_base * (self.max_exponent - MIN_EXPONENT + 1)


PowerTable = dict[int, list[tuple[int, int]]]


def build_power_table(bounds: SearchBounds) -> PowerTable:
    if bounds.table_entries > MAX_TABLE_ENTRIES:
        raise TableTooLarge(
            f"power table would hold {bounds.table_entries} entries (limit {MAX_TABLE_ENTRIES})")
    table: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for base in range(1, bounds.max_base + 1):
        for exp in range(MIN_EXPONENT, bounds.max_exponent + 1):
            table[base ** exp].append((base, exp))
    # base-major insertion already leaves each list sorted by (base, exponent)
    return dict(table)


@dataclass(frozen=True, order=True)
class Solution:
    A: int
    B: int
    C: int
    x: int
    y: int
    z: int
    common_prime: int | None = None

    def __str__(self):
        return f"({self.A},{self.B},{self.C};{self.x},{self.y},{self.z})"

    @property
    def key(self) -> tuple[int, int, int, int, int, int]:
        return (self.A, self.B, self.C, self.x, self.y, self.z)


@dataclass(frozen=True)
class SearchResult:
    bounds: SearchBounds
    solutions: tuple[Solution, ...]

    @property
    def violations(self) -> tuple[Solution, ...]:
        return tuple(s for s in self.solutions if s.common_prime is None)

    def to_record(self) -> dict:
        return {
            "max_base": self.bounds.max_base,
            "max_exponent": self.bounds.max_exponent,
            "solutions": [dict(zip("ABCxyz", s.key), common_prime=s.common_prime)
                          for s in self.solutions],
            "violations": [dict(zip("ABCxyz", s.key)) for s in self.violations],
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> SearchResult:
        sols = tuple(Solution(*(s[k] for k in "ABCxyz"), s["common_prime"])
                     for s in rec["solutions"])
        return cls(SearchBounds(rec["max_base"], rec["max_exponent"]), sols)


def _entries(table: PowerTable) -> list[tuple[int, int, int]]:
    return sorted((b, e, v) for v, pairs in table.items() for b, e in pairs)


def _scan(table: PowerTable, entries: list[tuple[int, int, int]],
          rows: Iterable[int]) -> list[Solution]:
    found = []
    for i in rows:
        a, x, av = entries[i]
        # (A, x) <= (B, y): each unordered pair once, including A == B
        for b, y, bv in entries[i:]:
            hits = table.get(av + bv)
            if not hits:
                continue
            for c, z in hits:
                cpf = common_prime_factor(IntValue(a), IntValue(b), IntValue(c))
                found.append(Solution(a, b, c, x, y, z, cpf))
    return found


def _scan_worker(args):
    table, entries, rows = args
    return _scan(table, entries, rows)


def search_solutions(bounds: SearchBounds, workers: int = 1) -> SearchResult:
    table = build_power_table(bounds)
    entries = _entries(table)
    if workers > 1:
        chunks = [(table, entries, range(w, len(entries), workers)) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = [s for part in pool.map(_scan_worker, chunks) for s in part]
    else:
        found = _scan(table, entries, range(len(entries)))
    return SearchResult(bounds, tuple(sorted(found)))

"""Explicit witness sets extracted from proof constructions.

Each builder returns the exact set a proof exhibits for the matching
parameter case. Validation never asserts: discrepancies come back as data so
the report layer can flag them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import Graph
from .predicates import is_ktds, is_ktrds, ktds_failures, ktrds_failures


@dataclass(frozen=True)
class Witness:
    """One or two vertex sets (0-based; a prism's i-bar is vertex n+i-1)."""

    sets: tuple[frozenset[int], ...]
    source: str
    claimed_sizes: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.claimed_sizes:
            object.__setattr__(self, "claimed_sizes",
                               tuple(len(s) for s in self.sets))

    @property
    def vertices(self) -> frozenset[int]:
        return self.sets[0]

    @property
    def size(self) -> int:
        return len(self.sets[0])

    def serializable(self) -> dict:
        """Sorted 1-based vertex lists plus the source tag."""
        return {"source": self.source,
                "sets": [sorted(v + 1 for v in s) for s in self.sets]}


@dataclass(frozen=True)
class WitnessReport:
    source: str
    valid: bool
    size_ok: bool
    expected_size: int | None
    actual_sizes: tuple[int, ...]
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.valid and self.size_ok


def _one_based(vertices) -> frozenset[int]:
    return frozenset(v - 1 for v in vertices)


def _bars(n: int, vertices) -> frozenset[int]:
    """Map 1-based bar labels i-bar onto prism vertices n+i-1."""
    return frozenset(n + v - 1 for v in vertices)


def witness_cycle_trds(n: int) -> Witness:
    """Total restrained dominating set of C_n, by residue of n mod 4."""
    if n < 4:
        raise ValueError("witness_cycle_trds needs n >= 4")
    s0 = {2 + 4 * i for i in range(n // 4)} | {3 + 4 * i for i in range(n // 4)}
    r = n % 4
    if r == 0:
        s = s0
    elif r == 1:
        s = s0 | {n - 1}
    elif r == 2:
        s = s0 | {1, n - 2}
    else:
        s = s0 | {1, n - 3, n}
    return Witness((_one_based(s),), f"cycle-trds:n={n}")


def witness_complement_cycle(n: int, k: int) -> Witness:
    """kTRDS of the complement of C_n, by the three cardinality cases."""
    if not (n >= k + 3 >= 4):
        raise ValueError("witness_complement_cycle needs n >= k+3 >= 4")
    if n >= 3 * k + 3:
        s = {3 * i + 1 for i in range(k + 1)}
    elif n >= 2 * k + 3:
        s = {2 * i + 1 for i in range(k + 2)}
    else:
        s = set(range(1, n + 1))
    return Witness((_one_based(s),), f"complement-cycle:n={n},k={k}")


def witness_complement_path(n: int, k: int) -> Witness:
    """kTRDS of the complement of P_n.

    For k = 1 the value-2 case uses the endpoint pair {1, n} (at n = 5 the
    middle vertex's only non-neighbors are 1 and 5, so {1, 4} instead); the
    k >= 3 middle case borrows the complement-of-cycle set, which survives in
    the edge-richer complement of the path.
    """
    if not (n >= k + 3 >= 4):
        raise ValueError("witness_complement_path needs n >= k+3 >= 4")
    if k == 1:
        if n == 4:
            s = {1, 2, 3, 4}
        elif n == 5:
            s = {1, 4}
        else:
            s = {1, n}
    elif n >= 3 * k + 1:
        s = {3 * i + 1 for i in range(k)} | {n}
    elif n >= 2 * k + 3:
        s = {2 * i + 1 for i in range(k + 2)}
    else:
        s = set(range(1, n + 1))
    return Witness((_one_based(s),), f"complement-path:n={n},k={k}")


def witness_prism_cycle_domatic_pair(n: int) -> Witness:
    """Two disjoint total dominating sets of the prism of C_n, by residue.

    The n > 7 case of the source construction is validated, not trusted; the
    report layer allowlists its failures.
    """
    if n < 4:
        raise ValueError("witness_prism_cycle_domatic_pair needs n >= 4")
    r = n % 4
    blocks = lambda start, count: {start + 4 * i for i in range(count)} | \
        {start + 1 + 4 * i for i in range(count)}
    if r == 0:
        plain_s, bar_s = {1, 2}, {1, 2}
        plain_t, bar_t = {3, 4}, {3, 4}
        if n > 4:
            plain_s |= blocks(5, math.ceil(n / 4) - 1)
            plain_t |= blocks(7, math.ceil(n / 4) - 1)
    elif r == 1:
        if n == 5:
            plain_s, bar_s = {1, 4}, {1, 4}
            plain_t, bar_t = {2, 5}, {2, 5}
        elif n == 9:
            plain_s, bar_s = {1, 4, 7}, {1, 4, 7}
            plain_t, bar_t = {2, 5, 8}, {2, 5, 8}
        else:
            plain_s, bar_s = {1, 4, 7}, {1, 4, 7}
            plain_t, bar_t = {3, 6, 9}, {3, 6, 9}
            plain_s |= blocks(10, math.ceil(n / 4) - 3)
            plain_t |= blocks(12, math.ceil(n / 4) - 3)
    elif r == 2:
        if n == 6:
            plain_s, bar_s = {1, 4}, {1, 4}
            plain_t, bar_t = {2, 5}, {2, 5}
        else:
            plain_s, bar_s = {1, 4}, {1, 4}
            plain_t, bar_t = {3, 6}, {3, 6}
            plain_s |= blocks(7, math.ceil(n / 4) - 2)
            plain_t |= blocks(9, math.ceil(n / 4) - 2)
    else:
        if n == 7:
            plain_s, bar_s = {1, 4}, {1, 4, 6}
            plain_t, bar_t = {2, 5}, {2, 5, 7}
        else:
            plain_s, bar_s = {1, 4}, {1, 4, n - 1}
            plain_t, bar_t = {2, 3, 6}, {3, 6}
            plain_s |= blocks(7, math.ceil(n / 4) - 2)
            plain_t |= blocks(9, math.ceil(n / 4) - 2)
    first = _one_based(plain_s) | _bars(n, bar_s)
    second = _one_based(plain_t) | _bars(n, bar_t)
    return Witness((first, second), f"prism-cycle-domatic-pair:n={n}")


def witness_prism_path_trds(n: int) -> Witness:
    """Total restrained dominating set of the prism of P_n, by residue.

    The n = 0 (mod 4) construction starts at n = 8; there is no stated set
    for n = 4.
    """
    if n < 5:
        raise ValueError("witness_prism_path_trds needs n >= 5")
    r = n % 4
    run = lambda count: {3 + 4 * i for i in range(count)} | \
        {4 + 4 * i for i in range(count)}
    if r == 0:
        if n == 8:
            plain, bar = {3, 4, 5, 6}, {1, 8}
        else:
            plain = {n - 3, n - 2} | run(n // 4 - 2)
            bar = {1, n - 6, n - 5, n}
    elif r == 1:
        plain = {n - 2} | run(n // 4 - 1)
        bar = {1, n - 2, n}
    elif r == 2:
        plain = run(n // 4)
        bar = {1, n}
    else:
        plain = run(n // 4)
        bar = {1, n - 1, n}
    s = _one_based(plain) | _bars(n, bar)
    return Witness((s,), f"prism-path-trds:n={n}")


def validate_witness(g: Graph, w: Witness, k: int,
                     expected_size: int | None) -> WitnessReport:
    """Check a witness against its predicate; failures are data, never raises.

    Single sets are checked as kTRDS; pairs are checked as two disjoint kTDS
    (the domatic-pair shape).
    """
    failures: list[str] = []
    if len(w.sets) == 1:
        valid = is_ktrds(g, w.vertices, k)
        if not valid:
            failures = ktrds_failures(g, w.vertices, k)
        size_ok = expected_size is None or w.size == expected_size
    else:
        a, b = w.sets
        valid = True
        if a & b:
            valid = False
            failures.append(f"sets overlap on {sorted(v + 1 for v in a & b)}")
        for tag, s in (("S", a), ("S'", b)):
            if not is_ktds(g, s, k):
                valid = False
                failures.extend(f"{tag}: {msg}" for msg in ktds_failures(g, s, k))
        size_ok = expected_size is None or \
            all(len(s) == expected_size for s in w.sets)
    return WitnessReport(source=w.source, valid=valid, size_ok=size_ok,
                         expected_size=expected_size,
                         actual_sizes=tuple(len(s) for s in w.sets),
                         failures=tuple(failures))

"""Exhaustive combinatorial counting oracles.

Everything here is counted by brute enumeration -- no Stirling numbers, no
closed forms -- so these totals can sit on the opposite side of an identity
check from the algebraic machinery.  Enumeration blows up factorially, so
every entry point guards n <= MAX_ENUM_N.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

MAX_ENUM_N = 10


def _guard(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > MAX_ENUM_N:
        raise ValueError(f"enumeration capped at n <= {MAX_ENUM_N}, got {n}")


def iter_set_partitions(n: int) -> Iterator[list[list[int]]]:
    """All partitions of {0, ..., n-1} into unordered nonempty blocks."""
    _guard(n)

    def rec(i: int, blocks: list[list[int]]) -> Iterator[list[list[int]]]:
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


@lru_cache(maxsize=None)
def _block_count_profile(n: int) -> tuple[int, ...]:
    """profile[k] = number of partitions of an n-set into exactly k blocks."""
    profile = [0] * (n + 2)
    for part in iter_set_partitions(n):
        profile[len(part)] += 1
    return tuple(profile)


def set_partitions_count(n: int, k: int | None = None) -> int:
    """Partitions of an n-set, optionally into exactly k blocks."""
    _guard(n)
    profile = _block_count_profile(n)
    if k is None:
        return sum(profile)
    return profile[k] if 0 <= k < len(profile) else 0


@lru_cache(maxsize=None)
def _perm_count(k: int) -> int:
    # orderings counted by enumeration, not by a factorial formula
    return sum(1 for _ in permutations(range(k)))


@lru_cache(maxsize=None)
def _bar_placements(k: int, s: int) -> int:
    # ways to interleave s identical bars with k blocks, counted exhaustively
    return sum(1 for _ in combinations(range(k + s), s))


def ordered_set_partitions_count(n: int, k: int | None = None) -> int:
    """Ordered set partitions (every block sequence of every partition)."""
    _guard(n)
    profile = _block_count_profile(n)
    if k is not None:
        return profile[k] * _perm_count(k) if 0 <= k < len(profile) else 0
    return sum(profile[j] * _perm_count(j) for j in range(len(profile)))


def barred_preferential_count(n: int, s: int) -> int:
    """Ordered set partitions with s separating bars inserted among blocks."""
    _guard(n)
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    profile = _block_count_profile(n)
    return sum(
        profile[j] * _perm_count(j) * _bar_placements(j, s) for j in range(len(profile))
    )


def r_stirling_count(n: int, k: int, r: int) -> int:
    """Partitions of an n-set into k blocks with elements 0..r-1 separated."""
    _guard(n)
    if r < 0 or r > n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    total = 0
    for part in iter_set_partitions(n):
        if len(part) != k:
            continue
        if all(sum(1 for e in block if e < r) <= 1 for block in part):
            total += 1
    return total


def enumerate_oracle(kind: str, n: int, *aux: int) -> int:
    """Dispatch by oracle name; sizes beyond the enumeration cap raise."""
    if kind == "set_partitions":
        return set_partitions_count(n, *aux)
    if kind == "ordered_set_partitions":
        return ordered_set_partitions_count(n, *aux)
    if kind == "barred_preferential":
        return barred_preferential_count(n, *aux)
    if kind == "r_stirling_partitions":
        return r_stirling_count(n, *aux)
    raise ValueError(f"unknown enumeration oracle {kind!r}")

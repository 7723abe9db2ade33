"""Rooted and sliding covers of indeterminate strings.

A length-k cover of an indeterminate string is *rooted* when every covering
block matches the k-prefix of the string, and *sliding* when each block only
has to match the block it overlaps or abuts; matching is nontransitive, so
the two notions genuinely differ.  ``rooted_covers`` finds all rooted cover
lengths of the whole string from its prefix table alone; the check and
oracle functions work directly on strings and serve as its ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels
from .prefix import require_feasible
from .strings import IndeterminateString, RegularString


@dataclass(frozen=True)
class RootedTraceRow:
    """State after one position is processed (dead candidates removed)."""

    position: int
    maxlive: tuple[int, ...]
    candidates: tuple[int, ...]


def rooted_covers(pi) -> list[int]:
    """Ascending rooted-cover lengths of the whole string, from pi alone."""
    require_feasible(pi)
    found, _ = kernels.rooted_scan(pi)
    return found


def rooted_covers_instrumented(pi) -> tuple[list[int], int]:
    """Rooted covers plus the candidate-loop body count.

    The counter increments once per entry into the candidate loop, the
    entry that breaks out included.
    """
    require_feasible(pi)
    return kernels.rooted_scan(pi)


def rooted_covers_trace(pi) -> list[RootedTraceRow]:
    """One row per position i in 2..n: maxlive and surviving candidates.

    Pure-Python mirror of the kernel; candidates killed at position i are
    pushed on a stack and removed before the row is recorded.
    """
    require_feasible(pi)
    n = len(pi)
    p = [0]
    p.extend(pi)
    cands = [v for v in range(1, n) if p[n - v + 1] == v]
    maxlive = [0] * (n + 1)
    rows: list[RootedTraceRow] = []
    for i in range(2, n + 1):
        dead: list[int] = []
        for v in cands:
            if v > p[i]:
                break
            t = i + v - 1
            if (maxlive[v] == 0 and t <= 2 * v) or maxlive[v] >= t - v:
                maxlive[v] = t
            else:
                maxlive[v] = -1
                dead.append(v)
        while dead:
            cands.remove(dead.pop())
        rows.append(RootedTraceRow(i, tuple(maxlive[1:]), tuple(cands)))
    return rows


def _masks(x: IndeterminateString | RegularString) -> list[int]:
    if isinstance(x, RegularString):
        x = x.to_indeterminate()
    return x.masks()


def _check_k(x, k: int) -> None:
    if not 1 <= k < len(x):
        raise ValueError(f"cover length {k} out of range 1..{len(x) - 1}")


def sliding_cover_check(x: IndeterminateString | RegularString, k: int) -> bool:
    """True when x has a sliding cover of length k.

    Dynamic programme over prefix lengths m: the m-prefix is coverable when
    m = k, or some coverable m'-prefix with m-k <= m' < m has its k-suffix
    matching the k-suffix of the m-prefix.
    """
    _check_k(x, k)
    masks = _masks(x)
    n = len(masks)
    ok = [False] * (n + 1)
    ok[k] = True
    for m in range(k + 1, n + 1):
        for mp in range(max(k, m - k), m):
            if not ok[mp]:
                continue
            if all(masks[mp - k + d] & masks[m - k + d] for d in range(k)):
                ok[m] = True
                break
    return ok[n]


def rooted_cover_check(x: IndeterminateString | RegularString, k: int) -> bool:
    """True when x has a rooted cover of length k.

    The occurrence set P = {p : x[p..p+k-1] matches the k-prefix} must
    contain 1 and n-k+1 and have no gap wider than k.
    """
    _check_k(x, k)
    masks = _masks(x)
    n = len(masks)
    last = 1  # 1-based start of the previous occurrence; position 1 always matches
    for p in range(2, n - k + 2):
        if p - last > k:
            return False
        if all(masks[d] & masks[p - 1 + d] for d in range(k)):
            last = p
    return last == n - k + 1


def rooted_covers_oracle(x: IndeterminateString | RegularString) -> list[int]:
    """All rooted-cover lengths by brute force over every candidate length."""
    n = len(x)
    if n < 2:
        raise ValueError("string must have length >= 2")
    return [k for k in range(1, n) if rooted_cover_check(x, k)]

"""Cover arrays of regular strings, computed from prefix tables.

gamma[i] is the length of the longest proper cover of the i-prefix (0 when
none); iterating gamma yields every cover of every prefix.  The main scan is
linear in n.  ``cover_array_oracle`` recomputes the same array from the
string itself by brute-force occurrence chaining and exists purely to check
the scan against the definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels
from .prefix import require_feasible
from .strings import RegularString


@dataclass(frozen=True)
class Range:
    """Prefix-match range: positions start..end match the length-long prefix."""

    start: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length - 1


@dataclass(frozen=True)
class CoverScanStats:
    forward_steps: int
    backward_steps: int
    chain_steps: int

    @property
    def total(self) -> int:
        return self.forward_steps + self.backward_steps + self.chain_steps


@dataclass(frozen=True)
class RangeSnapshot:
    """State after one connected-range sweep (1-based positions)."""

    start: int
    end: int
    maxlive: tuple[int, ...]
    cover_array: tuple[int, ...]


def ranges(pi) -> list[Range]:
    """One Range per position with pi[i] > 0, in position order."""
    require_feasible(pi)
    return [Range(i + 1, v) for i, v in enumerate(pi) if v > 0]


def ranges_connected(a: Range, b: Range) -> bool:
    """True when the later range starts inside-or-adjacent and extends the earlier."""
    first, second = (a, b) if a.start <= b.start else (b, a)
    return second.start <= first.end + 1 < second.end + 1


def cover_array(pi) -> list[int]:
    """Cover array from a feasible prefix table of a regular string."""
    require_feasible(pi)
    gamma, _, _, _ = kernels.cover_scan(pi)
    return gamma


def cover_array_instrumented(pi) -> tuple[list[int], CoverScanStats]:
    """Cover array plus loop-body counts of the three scans."""
    require_feasible(pi)
    gamma, fwd, bwd, chain = kernels.cover_scan(pi)
    return gamma, CoverScanStats(fwd, bwd, chain)


def cover_array_trace(pi) -> list[RangeSnapshot]:
    """Per-range maxlive and gamma snapshots of the cover scan.

    Pure-Python mirror of the kernel, recording state after each connected
    range is swept (its backward pass included); useful for debugging
    against worked examples.
    """
    require_feasible(pi)
    n = len(pi)
    p = [0]
    p.extend(pi)
    gamma = [0] * (n + 1)
    maxlive = [0] * (n + 1)
    deadmax = 0
    snapshots: list[RangeSnapshot] = []
    lastlim = 1
    i = 2
    while lastlim < n:
        j = p[i]
        if j == 0:
            if i > lastlim:
                maxlive[i - 1] = -1
                deadmax = i - 1
                lastlim = i
        else:
            lim = i + j - 1
            if lim > lastlim:
                jp = lastlim + 1 - i
                for ip in range(lastlim + 1, lim + 1):
                    jp += 1
                    if jp > deadmax and (
                        (maxlive[jp] == 0 and ip <= 2 * jp)
                        or maxlive[jp] >= ip - jp
                    ):
                        maxlive[jp] = ip
                        gamma[ip] = jp
                    else:
                        maxlive[jp] = -1
                for ip in range(lim, lastlim, -1):
                    jpp = gamma[jp]
                    while jpp > deadmax and 0 < maxlive[jpp] < ip:
                        maxlive[jpp] = ip
                        if jpp > gamma[ip]:
                            gamma[ip] = jpp
                        jpp = gamma[jpp]
                    jp -= 1
                lastlim = lim
                snapshots.append(
                    RangeSnapshot(i, lim, tuple(maxlive[1:]), tuple(gamma[1:]))
                )
        i += 1
    return snapshots


def covers_of_prefix(gamma, i: int) -> list[int]:
    """All cover lengths of the i-prefix, longest first (the gamma chain)."""
    if not 1 <= i <= len(gamma):
        raise ValueError(f"position {i} out of range 1..{len(gamma)}")
    chain = []
    j = gamma[i - 1]
    while j > 0:
        chain.append(j)
        j = gamma[j - 1]
    return chain


def cover_array_oracle(x: RegularString) -> list[int]:
    """Cover array recomputed from the string by occurrence chaining.

    For each prefix length j, every occurrence of the j-prefix is found by
    direct letter comparison; walking the occurrence starts left to right,
    a prefix x[1..i] is covered by x[1..j] exactly when the occurrences
    chain gaplessly from position 1 to an occurrence ending at i.  Knows
    nothing about prefix tables or liveness, so it is an independent check
    on cover_array.
    """
    letters = x.letters
    n = len(letters)
    # match[p] = longest common prefix of the string and its suffix at
    # 0-based p, by direct comparison
    match = [0] * n
    for p in range(1, n):
        k = 0
        while p + k < n and letters[k] == letters[p + k]:
            k += 1
        match[p] = k
    # starts_for[j] = occurrence starts (0-based, excluding 0) of the j-prefix
    starts_for: list[list[int]] = [[] for _ in range(n + 1)]
    for p in range(1, n):
        for j in range(1, match[p] + 1):
            starts_for[j].append(p)
    gamma = [0] * n
    for j in range(1, n):
        reach = j  # occurrence at position 1 covers the j-prefix itself
        for p in starts_for[j]:
            if p > reach:  # 0-based p is 1-based p+1; gapless needs p+1 <= reach+1
                break
            reach = p + j
            if j > gamma[reach - 1]:
                gamma[reach - 1] = j
    return gamma

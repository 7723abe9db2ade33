"""Random feasible-array generation and the scaling benchmark.

The benchmark runs the rooted-cover scan over freshly generated feasible
arrays and reports the instrumented inner-loop counts per length.  Results
must be bit-reproducible, so the generator is pinned down completely rather
than left to a platform default:

* stream: SplitMix64 (state += 0x9E3779B97F4A7C15; output = murmur-style
  finalizer with constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB);
* bounded draw below m: (next_u64() * m) >> 64 (multiply-shift);
* the stream for trial t at length n is seeded with
  mix64(mix64(mix64(seed) ^ n) ^ t), so trials are independent and may be
  computed in any order.

Two entry distributions are provided, both feasible by construction
(y[1] = n, 0 <= y[i] <= n-i+1):

* ``uniform``: y[i] uniform on 0..n-i+1.  Simple, but such arrays have
  about ln(n) whole-string borders in expectation, so the scan's mean
  count per position grows like log n.
* ``geometric`` (the default): P(y[i] >= k) = (3/4)^k, capped at the
  feasibility bound.  This is the match-length law of prefix tables of
  random indeterminate strings over a binary alphabet (per-position match
  chance 7/9, approximated by 3/4 for a clean two-bit draw); the expected
  border count is then constant and the scan is flat-linear on average.

The scan's average-case constant depends heavily on this choice; see the
README for measurements.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import IO

from ._backend import kernels

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 output finalizer (bijective on 64-bit words)."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Tiny explicit PRNG; identical output in any implementation."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform draw from 0..bound-1 by multiply-shift."""
        return (self.next_u64() * bound) >> 64


def trial_rng(seed: int, n: int, trial: int) -> SplitMix64:
    """Independent stream for one (length, trial) pair."""
    return SplitMix64(mix64(mix64(mix64(seed) ^ n) ^ trial))


def random_feasible_array(n: int, rng: SplitMix64) -> list[int]:
    """Feasible array of length n: y[1] = n, y[i] uniform on 0..n-i+1."""
    if n < 2:
        raise ValueError("length must be >= 2")
    y = [n]
    for i in range(1, n):
        y.append(rng.below(n - i + 1))
    return y


def string_like_feasible_array(n: int, rng: SplitMix64) -> list[int]:
    """Feasible array with geometric entries: P(y[i] >= k) = (3/4)^k, capped.

    Each entry consumes two-bit pairs from the stream, least significant
    pair first, new 64-bit words fetched as needed; the entry is the length
    of the initial run of nonzero pairs, stopped early at the feasibility
    bound.
    """
    if n < 2:
        raise ValueError("length must be >= 2")
    y = [n]
    word = rng.next_u64()
    avail = 32
    for i in range(1, n):
        bound = n - i
        v = 0
        while v < bound:
            if avail == 0:
                word = rng.next_u64()
                avail = 32
            pair = word & 3
            word >>= 2
            avail -= 1
            if pair == 0:
                break
            v += 1
        y.append(v)
    return y


def unary_prefix_table(n: int) -> list[int]:
    """Prefix table of a one-letter string: [n, n-1, ..., 1] (worst case)."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return list(range(n, 0, -1))


_GENERATORS = {
    "geometric": string_like_feasible_array,
    "uniform": random_feasible_array,
}


@dataclass(frozen=True)
class BenchConfig:
    lengths: tuple[int, ...]
    trials: int
    seed: int
    unary: bool = False
    distribution: str = "geometric"

    def __post_init__(self):
        if not self.lengths or any(n < 2 for n in self.lengths):
            raise ValueError("lengths must all be >= 2")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.distribution not in _GENERATORS:
            raise ValueError(f"unknown distribution {self.distribution!r}")


@dataclass(frozen=True)
class BenchRow:
    n: int
    mean: float
    min: int
    max: int

    @property
    def ratio(self) -> float:
        return self.mean / self.n


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]


def run_benchmark(cfg: BenchConfig) -> BenchReport:
    """Inner-loop counts of the rooted-cover scan, aggregated per length.

    With ``unary`` set, every trial runs the worst-case table [n, n-1, .., 1]
    instead of a random feasible array.
    """
    generate = _GENERATORS[cfg.distribution]
    rows = []
    for n in cfg.lengths:
        counts = []
        for t in range(cfg.trials):
            if cfg.unary:
                pi = unary_prefix_table(n)
            else:
                pi = generate(n, trial_rng(cfg.seed, n, t))
            _, inner = kernels.rooted_scan(pi)
            counts.append(inner)
        rows.append(
            BenchRow(n, sum(counts) / len(counts), min(counts), max(counts))
        )
    return BenchReport(tuple(rows))


def emit_csv(report: BenchReport, destination: str | IO[str] | None = None) -> None:
    """Write the report as ``n,mean,min,max,ratio`` rows (stdout by default)."""
    if not report.rows:
        raise ValueError("empty report")
    if destination is None:
        _write_csv(report, sys.stdout)
    elif isinstance(destination, str):
        with open(destination, "w", encoding="ascii") as handle:
            _write_csv(report, handle)
    else:
        _write_csv(report, destination)


def _write_csv(report: BenchReport, out: IO[str]) -> None:
    out.write("n,mean,min,max,ratio\n")
    for row in report.rows:
        out.write(f"{row.n},{row.mean!r},{row.min},{row.max},{row.ratio!r}\n")

"""Prefix tables, feasibility checks and border extraction.

A prefix table pi[1..n] has pi[1] = n and, for i >= 2, pi[i] = length of the
longest substring at position i matching a prefix of the string.  Feasible
arrays (pi[1] = n, 0 <= pi[i] <= n-i+1) are exactly the prefix tables of
indeterminate strings, so every function here that consumes a table accepts
any feasible array.
"""

from __future__ import annotations

from ._backend import kernels
from .strings import IndeterminateString, RegularString


def prefix_table_regular(x: RegularString) -> list[int]:
    """Prefix table of a regular string, computed in linear time."""
    return kernels.prefix_table_regular_ids(x.ids())


def prefix_table_indet(x: IndeterminateString) -> list[int]:
    """Prefix table of an indeterminate string (direct extension scan)."""
    return kernels.prefix_table_indet_masks(x.masks())


def first_infeasible(values) -> int | None:
    """1-based position of the first feasibility violation, or None."""
    n = len(values)
    if n == 0:
        return 0
    if values[0] != n:
        return 1
    for i in range(1, n):
        if not 0 <= values[i] <= n - i:
            return i + 1
    return None


def validate_feasible(values) -> bool:
    """True when values[1] = n and values[i] lies in 0..n-i+1 for i in 2..n."""
    return first_infeasible(values) is None


def require_feasible(values) -> None:
    pos = first_infeasible(values)
    if pos == 0:
        raise ValueError("infeasible: empty array")
    if pos is not None:
        raise ValueError(f"infeasible at position {pos}")


def whole_string_borders(pi) -> list[int]:
    """Ascending proper border lengths of the whole string, read off pi.

    Length v in 1..n-1 is a border exactly when pi[n-v+1] = v: the match at
    position n-v+1 then runs to the end of the string.
    """
    n = len(pi)
    return [v for v in range(1, n) if pi[n - v] == v]


def border_array_from_prefix_table(pi) -> list[int]:
    """Border array of a regular string from its prefix table, linear time.

    Only valid when pi comes from a regular string.  Each match at i of
    length pi[i] makes pi[i] the longest prefix-match ending at i+pi[i]-1;
    shorter borders at earlier endpoints follow by stepping the value down
    while sweeping right to left.
    """
    n = len(pi)
    beta = [0] * n
    for i in range(1, n):
        if pi[i] > 0:
            end = i + pi[i] - 1
            if pi[i] > beta[end]:
                beta[end] = pi[i]
    for i in range(n - 2, 0, -1):
        if beta[i + 1] - 1 > beta[i]:
            beta[i] = beta[i + 1] - 1
    return beta

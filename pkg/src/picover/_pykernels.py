"""Pure-Python compute kernels for the hot loops.

``picover._ckernels`` holds compiled twins of these functions; both backends
must return identical values, counters included (tests/test_backends.py
enforces this).  Arrays are plain lists; the algorithms below index them
1-based internally, which keeps the scans readable.
"""

from __future__ import annotations

BACKEND_NAME = "python"


def prefix_table_regular_ids(ids) -> list[int]:
    """Prefix table of a regular string given as symbol ids, in linear time.

    table[0] = n; table[i] is the length of the longest substring starting at
    0-based position i that equals a prefix of the whole string (two-pointer
    rightmost-window scan).
    """
    n = len(ids)
    pi = [0] * n
    pi[0] = n
    left = right = 0  # rightmost known prefix-match window [left, right)
    for i in range(1, n):
        k = 0
        if i < right:
            k = pi[i - left]
            if k > right - i:
                k = right - i
        while i + k < n and ids[k] == ids[i + k]:
            k += 1
        pi[i] = k
        if i + k > right:
            left, right = i, i + k
    return pi


def prefix_table_indet_masks(masks) -> list[int]:
    """Prefix table of an indeterminate string given as alphabet bitmasks.

    Matching is mask intersection, which is not transitive, so no window can
    be reused: each position is extended directly (quadratic worst case).
    """
    n = len(masks)
    pi = [0] * n
    pi[0] = n
    for i in range(1, n):
        k = 0
        while i + k < n and masks[k] & masks[i + k]:
            k += 1
        pi[i] = k
    return pi


def cover_scan(pi) -> tuple[list[int], int, int, int]:
    """Cover array of a regular string from its prefix table.

    Scans the table left to right, identifying runs of connected ranges.
    Each newly covered stretch is swept twice: forward to settle which prefix
    lengths stay live (``maxlive[j]`` = rightmost position covered by the
    length-j prefix, -1 once dead), then backward so that live ancestors in
    the existing cover chains are propagated.  Returns
    (gamma, forward_steps, backward_steps, chain_steps); the counters are the
    loop-body execution counts of the three scans.
    """
    n = len(pi)
    p = [0]
    p.extend(pi)  # 1-based view
    gamma = [0] * (n + 1)
    maxlive = [0] * (n + 1)
    # Once some position is provably uncoverable, every shorter prefix is
    # permanently dead; deadmax records that bound.
    deadmax = 0
    forward = backward = chain = 0
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
                    forward += 1
                    if jp > deadmax and (
                        (maxlive[jp] == 0 and ip <= 2 * jp)
                        or maxlive[jp] >= ip - jp
                    ):
                        maxlive[jp] = ip
                        gamma[ip] = jp
                    else:
                        maxlive[jp] = -1
                for ip in range(lim, lastlim, -1):
                    backward += 1
                    jpp = gamma[jp]
                    # A cover of the length-jp prefix also covers up to ip.
                    while jpp > deadmax and 0 < maxlive[jpp] < ip:
                        chain += 1
                        maxlive[jpp] = ip
                        if jpp > gamma[ip]:
                            gamma[ip] = jpp
                        jpp = gamma[jpp]
                    jp -= 1
                lastlim = lim
        i += 1
    return gamma[1:], forward, backward, chain


def rooted_scan(pi) -> tuple[list[int], int]:
    """Rooted cover lengths of a whole (indeterminate) string from its prefix table.

    Candidates are the whole-string border lengths; each position either
    extends a candidate's covered stretch or kills it for good.  Returns
    (ascending cover lengths, inner-loop body count); the counter increments
    once per candidate-loop entry, including the entry that breaks.
    """
    n = len(pi)
    p = [0]
    p.extend(pi)  # 1-based view
    cands = [v for v in range(1, n) if p[n - v + 1] == v]
    maxlive = [0] * (n + 1)
    inner = 0
    for i in range(2, n + 1):
        pi_i = p[i]
        died = False
        for v in cands:
            inner += 1
            if v > pi_i:
                break
            t = i + v - 1
            if (maxlive[v] == 0 and t <= 2 * v) or maxlive[v] >= t - v:
                maxlive[v] = t
            else:
                maxlive[v] = -1
                died = True
        if died:
            cands = [v for v in cands if maxlive[v] >= 0]
    return [v for v in cands if maxlive[v] == n], inner

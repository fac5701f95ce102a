"""Pure-Python edit-distance kernels.

Fallback for environments where the compiled extension is unavailable.
Both implementations must stay semantically identical; test_kernels.py
cross-checks them on random inputs.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def edit_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Unit-cost Levenshtein distance (insert/delete/substitute) between
    two token-id sequences."""
    n, m = len(a), len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    prev = list(range(m + 1))
    cur = [0] * (m + 1)
    for i in range(1, n + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
        prev, cur = cur, prev
    return prev[m]


def shifted_edit_search(
    hyp: Sequence[int],
    ref: Sequence[int],
    max_span: int = 10,
    max_shifts: int = 50,
) -> tuple[int, int]:
    """Greedy phrase-shift search over a hypothesis.

    Each round enumerates every contiguous hypothesis span of length <=
    max_span moved to every other position, at unit cost per move.  The
    move giving the lowest resulting edit distance is applied when it
    beats the current distance by more than the unit cost it spends;
    ties break on (earliest span start, shortest span, earliest
    destination).  Rounds are capped at max_shifts.

    Returns (total_edits, shifts_applied) where total_edits includes the
    applied shifts, so total_edits / len(ref) is the edit rate.
    """
    hyp = list(hyp)
    ref = list(ref)
    best = edit_distance(hyp, ref)
    shifts = 0
    while shifts < max_shifts and best > 1:
        n = len(hyp)
        found = None  # (distance, start, length, destination)
        for start in range(n):
            top = min(max_span, n - start)
            for length in range(1, top + 1):
                span = hyp[start : start + length]
                rest = hyp[:start] + hyp[start + length :]
                for dest in range(len(rest) + 1):
                    if dest == start:
                        continue
                    cand = rest[:dest] + span + rest[dest:]
                    d = edit_distance(cand, ref)
                    key = (d, start, length, dest)
                    if found is None or key < found:
                        found = key
        if found is None or found[0] + 1 >= best:
            break
        d, start, length, dest = found
        span = hyp[start : start + length]
        rest = hyp[:start] + hyp[start + length :]
        hyp = rest[:dest] + span + rest[dest:]
        best = d
        shifts += 1
    return best + shifts, shifts

"""Candidate enumeration shared by the intersection profiler and the exact
2-dimensional distance algorithm.

For distinct points alpha_1..alpha_n, a map x -> delta*x - gamma with at
least two matches delta*alpha_i = alpha_j + gamma is pinned down by any two
of its match pairs:

    delta = (alpha_j1 - alpha_j2) / (alpha_i1 - alpha_i2)
    gamma = delta*alpha_i1 - alpha_j1

so enumerating pairs of index pairs reaches every such (delta, gamma), and
grouping the pairs by the resulting key recovers its full match set.
"""

from __future__ import annotations

from typing import Sequence

from .field import FieldElement


def candidate_groups(points: Sequence[FieldElement]) -> dict[tuple, set[tuple[int, int]]]:
    """Map each candidate ``(delta.raw, gamma.raw)`` != (1, 0) to its match pairs.

    Keys appear in first-enumeration order (loops over i1 < i2, then j1, j2).
    """
    n = len(points)
    if n < 2:
        return {}
    ops = points[0].field.ops
    raw = [pt.raw for pt in points]
    sub, mul = ops.sub, ops.mul
    identity = (ops.one, ops.zero)

    inv_diff = {}
    for i1 in range(n):
        for i2 in range(i1 + 1, n):
            inv_diff[i1, i2] = ops.inv(sub(raw[i1], raw[i2]))
    diff = [[sub(raw[j1], raw[j2]) for j2 in range(n)] for j1 in range(n)]

    groups: dict[tuple, set[tuple[int, int]]] = {}
    for i1 in range(n):
        a1 = raw[i1]
        for i2 in range(i1 + 1, n):
            inv = inv_diff[i1, i2]
            for j1 in range(n):
                row = diff[j1]
                b1 = raw[j1]
                for j2 in range(n):
                    if j2 == j1:
                        continue
                    delta = mul(row[j2], inv)
                    gamma = sub(mul(delta, a1), b1)
                    key = (delta, gamma)
                    if key == identity:
                        continue
                    grp = groups.get(key)
                    if grp is None:
                        groups[key] = {(i1, j1), (i2, j2)}
                    else:
                        grp.add((i1, j1))
                        grp.add((i2, j2))
    return groups


def longest_chain(pairs) -> tuple[int, list[tuple[int, int]]]:
    """Longest chain of match pairs increasing in both coordinates.

    Each left index matches at most one right index (and vice versa), so this
    is a longest increasing subsequence of the right indices ordered by the
    left ones.  Returns the length and one lexicographically-first chain.
    """
    ordered = sorted(pairs)
    if not ordered:
        return 0, []
    js = [j for _, j in ordered]
    m = len(js)
    # best[k]: length of longest increasing run starting at k
    best = [1] * m
    nxt = [-1] * m
    for k in range(m - 1, -1, -1):
        for t in range(k + 1, m):
            if js[t] > js[k] and best[t] + 1 > best[k]:
                best[k] = best[t] + 1
                nxt[k] = t
    length = max(best)
    start = best.index(length)
    chain = []
    k = start
    while k != -1:
        chain.append(ordered[k])
        k = nxt[k]
    return length, chain


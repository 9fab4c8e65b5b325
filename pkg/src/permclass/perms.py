"""Permutations in one-line notation.

A permutation of length n is stored as a tuple of the integers 1..n, e.g.
``(2, 4, 1, 3)`` for 2413.  The empty tuple is the empty permutation.  All
values are immutable; every function here is pure and safe to call from
multiple threads.

Text formats: comma-separated one-line notation ("8,9,1,6,7,3,4,2"), or a
compact digit string ("89167342") for lengths up to 9.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

EMPTY: Perm = ()


def perm(values: Iterable[int]) -> Perm:
    """Validate and return one-line notation: values must be a bijection onto 1..n."""
    p = tuple(values)
    n = len(p)
    seen = [False] * (n + 1)
    for v in p:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
            raise ValueError(f"value {v!r} is outside 1..{n}")
        if seen[v]:
            raise ValueError(f"duplicate value {v}")
        seen[v] = True
    return p


def parse_perm(text: str) -> Perm:
    """Parse comma-separated one-line notation, or a compact digit string.

    Distinct values that are not a bijection onto 1..n are rank-reduced, so
    any sequence of distinct positive integers names the pattern it is order
    isomorphic to.

    >>> parse_perm("2,4,1,3")
    (2, 4, 1, 3)
    >>> parse_perm("2413")
    (2, 4, 1, 3)
    >>> parse_perm("9,1,6,7,2")
    (5, 1, 3, 4, 2)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if "," in text:
        values = []
        for token in text.split(","):
            token = token.strip()
            if not token.isdigit() or int(token) < 1:
                raise ValueError(f"invalid permutation entry {token!r}")
            values.append(int(token))
    else:
        if not text.isdigit():
            raise ValueError(f"invalid permutation text {text!r}")
        if "0" in text:
            raise ValueError(
                f"invalid permutation text {text!r}: compact form uses digits 1-9"
            )
        values = [int(ch) for ch in text]
    if len(set(values)) != len(values):
        dup = next(v for i, v in enumerate(values) if v in values[:i])
        raise ValueError(f"duplicate value {dup}")
    n = len(values)
    if max(values) == n:
        return perm(values)
    return standardize(values)


def format_perm(p: Perm, compact: bool = False) -> str:
    if compact and len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def standardize(values: Sequence[int]) -> Perm:
    """Rank-reduce a sequence of distinct integers to the permutation it patterns.

    >>> standardize((9, 1, 6, 7, 2))
    (5, 1, 3, 4, 2)
    """
    order = sorted(values)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in values)


def increasing_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing_perm(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def is_increasing(p: Perm) -> bool:
    return all(p[i] < p[i + 1] for i in range(len(p) - 1))


def is_decreasing(p: Perm) -> bool:
    return all(p[i] > p[i + 1] for i in range(len(p) - 1))


def contains(pi: Perm, sigma: Perm) -> bool:
    """True iff pi has a subsequence order-isomorphic to sigma.

    Depth-first embedding search.  The value window for the next point is
    pinned by the already-placed points adjacent to it in value, which prunes
    most branches; patterns in this package are short basis elements, so the
    worst-case exponential behaviour in len(sigma) never bites.
    """
    k = len(sigma)
    n = len(pi)
    if k == 0:
        return True
    if k > n:
        return False
    # For each pattern index t, the earlier index whose value is closest below
    # (pred) and closest above (succ) sigma[t]; -1 when there is none.
    pred = [-1] * k
    succ = [-1] * k
    for t in range(k):
        for s in range(t):
            if sigma[s] < sigma[t] and (pred[t] < 0 or sigma[s] > sigma[pred[t]]):
                pred[t] = s
            if sigma[s] > sigma[t] and (succ[t] < 0 or sigma[s] < sigma[succ[t]]):
                succ[t] = s
    chosen = [0] * k

    def extend(t: int, start: int) -> bool:
        if t == k:
            return True
        lo = chosen[pred[t]] if pred[t] >= 0 else 0
        hi = chosen[succ[t]] if succ[t] >= 0 else n + 1
        for i in range(start, n - (k - t) + 1):
            v = pi[i]
            if lo < v < hi:
                chosen[t] = v
                if extend(t + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def avoids(pi: Perm, sigma: Perm) -> bool:
    return not contains(pi, sigma)


def avoids_all(pi: Perm, patterns: Iterable[Perm]) -> bool:
    return all(not contains(pi, sigma) for sigma in patterns)


def direct_sum(pi: Perm, sigma: Perm) -> Perm:
    """pi followed by sigma shifted up by len(pi)."""
    m = len(pi)
    return pi + tuple(v + m for v in sigma)


def skew_sum(pi: Perm, sigma: Perm) -> Perm:
    """pi shifted up by len(sigma), followed by sigma."""
    n = len(sigma)
    return tuple(v + n for v in pi) + sigma


def reverse(pi: Perm) -> Perm:
    return pi[::-1]


def complement(pi: Perm) -> Perm:
    n = len(pi)
    return tuple(n + 1 - v for v in pi)


def inverse(pi: Perm) -> Perm:
    out = [0] * len(pi)
    for i, v in enumerate(pi):
        out[v - 1] = i + 1
    return tuple(out)


def is_sum_decomposable(pi: Perm) -> bool:
    """True iff pi = alpha (+) beta for nonempty alpha, beta."""
    top = 0
    for i in range(len(pi) - 1):
        if pi[i] > top:
            top = pi[i]
        if top == i + 1:
            return True
    return False


def is_skew_decomposable(pi: Perm) -> bool:
    n = len(pi)
    bottom = n + 1
    for i in range(n - 1):
        if pi[i] < bottom:
            bottom = pi[i]
        if bottom == n - i:
            return True
    return False


def sum_components(pi: Perm) -> list[Perm]:
    """The unique maximal decomposition of pi into sum-indecomposable parts.

    A cut is possible after position i exactly when the first i values are
    {1..i}; cutting at every such point yields sum-indecomposable parts.
    """
    if not pi:
        raise ValueError("the empty permutation has no decomposition")
    parts = []
    start = 0
    top = 0
    for i, v in enumerate(pi, start=1):
        if v > top:
            top = v
        if top == i:
            parts.append(standardize(pi[start:i]))
            start = i
    return parts


def skew_components(pi: Perm) -> list[Perm]:
    """Maximal decomposition into skew-indecomposable parts (values descending)."""
    if not pi:
        raise ValueError("the empty permutation has no decomposition")
    n = len(pi)
    parts = []
    start = 0
    bottom = n + 1
    for i, v in enumerate(pi, start=1):
        if v < bottom:
            bottom = v
        if bottom == n - i + 1:
            parts.append(standardize(pi[start:i]))
            start = i
    return parts


def delete_point(pi: Perm, index: int) -> Perm:
    """Pattern left after removing the point at the given 0-based position."""
    return standardize(pi[:index] + pi[index + 1:])


def one_point_deletions(pi: Perm) -> set[Perm]:
    return {delete_point(pi, i) for i in range(len(pi))}


def closure(patterns: Iterable[Perm]) -> set[Perm]:
    """All nonempty permutations contained in some member of the given set."""
    out: set[Perm] = set()
    for p in patterns:
        n = len(p)
        for k in range(1, n + 1):
            for idxs in combinations(range(n), k):
                out.add(standardize([p[i] for i in idxs]))
    return out


def subsequence_patterns(pi: Perm) -> Iterator[Perm]:
    """Yield the pattern of every nonempty subsequence of pi (with repeats)."""
    n = len(pi)
    for k in range(1, n + 1):
        for idxs in combinations(range(n), k):
            yield standardize([pi[i] for i in idxs])

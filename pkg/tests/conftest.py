"""Shared brute-force oracles, kept independent of the code paths they check."""
from __future__ import annotations

from itertools import combinations, permutations

from permclass.perms import Perm, standardize


def all_perms(n: int):
    """Every permutation of length n, one-line notation."""
    return (tuple(p) for p in permutations(range(1, n + 1)))


def perms_up_to(n: int):
    for k in range(1, n + 1):
        yield from all_perms(k)


def naive_contains(pi: Perm, sigma: Perm) -> bool:
    """Containment by enumerating every subsequence of the right length."""
    k = len(sigma)
    if k == 0:
        return True
    return any(
        standardize([pi[i] for i in idxs]) == sigma
        for idxs in combinations(range(len(pi)), k)
    )


def naive_av_count(patterns: list[Perm], n: int) -> int:
    """Count Av(patterns) at length n by filtering all n! permutations."""
    return sum(
        1
        for p in all_perms(n)
        if all(not naive_contains(p, q) for q in patterns)
    )

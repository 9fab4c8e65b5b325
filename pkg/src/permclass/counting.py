"""Exhaustive length-by-length enumeration of pattern classes.

This is the ground-truth oracle for every generating function the engine
produces.  Generation is incremental: the length-(n+1) members arise by
inserting the new maximum value into every position of every length-n
member, which is complete because deleting the maximum of a class member
yields a class member.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .perms import Perm, contains, perm
from .uclass import USpec

DEFAULT_MEMBER_CAP = 10_000_000
MEMBER_CAP_ENV = "PERMCLASS_MAX_MEMBERS"


class MemberLimitError(RuntimeError):
    """Raised when one enumeration level would exceed the member cap."""


def member_cap_from_env(default: int = DEFAULT_MEMBER_CAP) -> int:
    raw = os.environ.get(MEMBER_CAP_ENV)
    if raw is None:
        return default
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MEMBER_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{MEMBER_CAP_ENV} must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class ClassSpec:
    """A finite basis; stored as an antichain sorted by (length, values)."""

    basis: tuple[Perm, ...] = ()

    @classmethod
    def from_patterns(cls, patterns: Iterable[Perm | str | Iterable[int]]) -> "ClassSpec":
        from .perms import parse_perm

        raw: set[Perm] = set()
        for p in patterns:
            if isinstance(p, str):
                raw.add(parse_perm(p))
            else:
                raw.add(perm(p))
        if any(len(p) == 0 for p in raw):
            raise ValueError("basis patterns must be nonempty")
        # Keep only minimal elements: drop anything containing another pattern.
        minimal = [
            p
            for p in raw
            if not any(q != p and contains(p, q) for q in raw)
        ]
        return cls(tuple(sorted(minimal, key=lambda p: (len(p), p))))

    def admits(self, pi: Perm) -> bool:
        n = len(pi)
        for b in self.basis:
            if len(b) > n:
                break  # basis is sorted by length
            if contains(pi, b):
                return False
        return True


@dataclass(frozen=True)
class CountTable:
    """Exact counts for lengths 1..N, with optional member lists."""

    counts: tuple[int, ...]
    members: tuple[tuple[Perm, ...], ...] | None = None

    @property
    def max_length(self) -> int:
        return len(self.counts)

    def count(self, n: int) -> int:
        if not 1 <= n <= len(self.counts):
            raise IndexError(f"length {n} outside 1..{len(self.counts)}")
        return self.counts[n - 1]

    def members_of_length(self, n: int) -> tuple[Perm, ...]:
        if self.members is None:
            raise ValueError("members were not retained")
        return self.members[n - 1]


def _grow(level: list[Perm]) -> Iterable[Perm]:
    for p in level:
        n1 = len(p) + 1
        for pos in range(n1):
            yield p[:pos] + (n1,) + p[pos:]


def _check_cap(count: int, n: int, cap: int) -> None:
    if count > cap:
        raise MemberLimitError(
            f"level {n} exceeds the member cap ({count} > {cap}); "
            f"raise it via {MEMBER_CAP_ENV} or the member_cap argument"
        )


def enumerate_av(
    spec: ClassSpec,
    max_n: int,
    *,
    keep_members: bool = False,
    member_cap: int = DEFAULT_MEMBER_CAP,
) -> CountTable:
    """Count Av(basis) exactly for each length 1..max_n."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    counts: list[int] = []
    kept: list[tuple[Perm, ...]] = []
    level: list[Perm] = [p for p in [(1,)] if spec.admits(p)]
    for n in range(1, max_n + 1):
        if n > 1:
            level = sorted(c for c in _grow(level) if spec.admits(c))
        _check_cap(len(level), n, member_cap)
        counts.append(len(level))
        if keep_members:
            kept.append(tuple(level))
    return CountTable(tuple(counts), tuple(kept) if keep_members else None)


def _xu_member(candidate: Perm, u: USpec, levels: dict[int, set[Perm]]) -> bool:
    """Membership of candidate in the X-inflation of U, assuming every
    strictly shorter member set is already in `levels`.

    Same recursion as septree.is_in_x_inflation, but the recursive calls hit
    the sets built by the enumeration itself: the parts of a basis-avoiding
    candidate avoid the basis too, so level membership decides them exactly.
    """
    if u.contains(candidate):
        return True
    n = len(candidate)
    pmax = 0
    pmin = n + 1
    for k in range(1, n):
        v = candidate[k - 1]
        if v > pmax:
            pmax = v
        if v < pmin:
            pmin = v
        if pmax == k:  # values split low/high: candidate = gamma (+) tau
            gamma = candidate[:k]
            tau = tuple(x - k for x in candidate[k:])
            if (u.contains(gamma) and tau in levels[n - k]) or (
                gamma in levels[k] and u.contains(tau)
            ):
                return True
        elif pmin == n - k + 1:  # candidate = gamma (-) tau
            gamma = tuple(x - (n - k) for x in candidate[:k])
            tau = candidate[k:]
            if (u.contains(gamma) and tau in levels[n - k]) or (
                gamma in levels[k] and u.contains(tau)
            ):
                return True
    return False


def enumerate_xu(
    u: USpec,
    spec: ClassSpec,
    max_n: int,
    *,
    keep_members: bool = False,
    member_cap: int = DEFAULT_MEMBER_CAP,
) -> CountTable:
    """Count {pi : pi in X[U] and pi avoids basis} for each length 1..max_n."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    counts: list[int] = []
    kept: list[tuple[Perm, ...]] = []
    levels: dict[int, set[Perm]] = {}
    level: list[Perm] = [
        p for p in [(1,)] if spec.admits(p) and u.contains(p)
    ]
    for n in range(1, max_n + 1):
        if n > 1:
            level = sorted(
                c
                for c in _grow(level)
                if spec.admits(c) and _xu_member(c, u, levels)
            )
        _check_cap(len(level), n, member_cap)
        levels[n] = set(level)
        counts.append(len(level))
        if keep_members:
            kept.append(tuple(level))
    return CountTable(tuple(counts), tuple(kept) if keep_members else None)

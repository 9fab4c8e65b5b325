"""Decidable specifications of the inflating class U.

Four kinds are supported: the trivial class {1}, an explicit finite
downward-closed set, the increasing permutations Av(21), and the decreasing
permutations Av(12).  These are exactly the kinds whose members, profiles and
indecomposable elements can be enumerated mechanically.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .perms import Perm, closure, is_decreasing, is_increasing, perm, standardize

TRIVIAL = "trivial"
FINITE = "finite"
INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass(frozen=True)
class USpec:
    kind: str
    members: frozenset[Perm] | None = None

    @classmethod
    def trivial(cls) -> "USpec":
        return cls(TRIVIAL)

    @classmethod
    def increasing(cls) -> "USpec":
        return cls(INCREASING)

    @classmethod
    def decreasing(cls) -> "USpec":
        return cls(DECREASING)

    @classmethod
    def finite(cls, perms: Iterable[Perm], complete: bool = False) -> "USpec":
        """Finite downward-closed U.  With complete=True the closure is taken;
        otherwise a set that is not already closed is rejected."""
        given = {perm(p) for p in perms}
        if any(len(p) == 0 for p in given):
            raise ValueError("the empty permutation cannot be a member")
        closed = closure(given)
        if closed != given and not complete:
            missing = sorted(closed - given, key=lambda p: (len(p), p))
            raise ValueError(f"set is not downward closed; e.g. missing {missing[0]}")
        return cls(FINITE, frozenset(closed))

    @cached_property
    def max_len(self) -> int:
        if self.kind != FINITE:
            raise ValueError("max_len is only defined for finite U")
        return max((len(p) for p in self.members), default=0)

    def contains(self, p: Perm) -> bool:
        n = len(p)
        if n == 0:
            return False
        if self.kind == TRIVIAL:
            return n == 1
        if self.kind == INCREASING:
            return is_increasing(p)
        if self.kind == DECREASING:
            return is_decreasing(p)
        return p in self.members

    __contains__ = contains

    def window_member(self, pi: Perm, i: int, j: int) -> bool:
        """Does the pattern of pi[i:j] belong to U?  Avoids standardizing
        where the kind allows a direct check."""
        if self.kind == TRIVIAL:
            return j - i == 1
        if self.kind == INCREASING:
            return all(pi[t] < pi[t + 1] for t in range(i, j - 1))
        if self.kind == DECREASING:
            return all(pi[t] > pi[t + 1] for t in range(i, j - 1))
        if j - i > self.max_len:
            return False
        return standardize(pi[i:j]) in self.members

    def describe(self) -> str:
        if self.kind == TRIVIAL:
            return "trivial"
        if self.kind == INCREASING:
            return "increasing"
        if self.kind == DECREASING:
            return "decreasing"
        return f"finite({len(self.members)} members)"

"""Separating trees, inflation, and membership in the X class and its inflations.

A separable permutation decomposes recursively into sums and skew sums of
single points; the canonical tree takes maximal decompositions at every
level, so no sum node has a sum child and no skew node has a skew child.

Trees serialize as nested bracket text: a leaf is "1", a sum node is
"+(child, child, ...)", a skew node is "-(...)".  For example 132 = 1 (+)
(1 (-) 1) serializes as "+(1, -(1, 1))".
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .perms import (
    Perm,
    avoids_all,
    direct_sum,
    skew_sum,
    sum_components,
    skew_components,
)
from .uclass import USpec

SEPARABLE_BASIS: tuple[Perm, ...] = ((2, 4, 1, 3), (3, 1, 4, 2))
X_BASIS: tuple[Perm, ...] = ((2, 1, 4, 3), (2, 4, 1, 3), (3, 1, 4, 2), (3, 4, 1, 2))

LEAF_KIND = "leaf"
SUM_KIND = "sum"
SKEW_KIND = "skew"


@dataclass(frozen=True)
class SepTree:
    kind: str
    children: tuple["SepTree", ...] = ()

    def frontier_size(self) -> int:
        if self.kind == LEAF_KIND:
            return 1
        return sum(c.frontier_size() for c in self.children)


LEAF = SepTree(LEAF_KIND)


def build_tree(pi: Perm) -> SepTree | None:
    """Canonical separating tree of pi, or None when pi is not separable."""
    if not pi:
        raise ValueError("the empty permutation has no separating tree")
    if len(pi) == 1:
        return LEAF
    parts = sum_components(pi)
    kind = SUM_KIND
    if len(parts) == 1:
        parts = skew_components(pi)
        kind = SKEW_KIND
        if len(parts) == 1:
            return None
    children = []
    for part in parts:
        sub = build_tree(part)
        if sub is None:
            return None
        children.append(sub)
    return SepTree(kind, tuple(children))


def tree_to_perm(tree: SepTree) -> Perm:
    if tree.kind == LEAF_KIND:
        return (1,)
    op = direct_sum if tree.kind == SUM_KIND else skew_sum
    return reduce(op, (tree_to_perm(c) for c in tree.children))


def tree_to_text(tree: SepTree) -> str:
    if tree.kind == LEAF_KIND:
        return "1"
    mark = "+" if tree.kind == SUM_KIND else "-"
    return mark + "(" + ", ".join(tree_to_text(c) for c in tree.children) + ")"


def tree_from_text(text: str) -> SepTree:
    tree, pos = _parse_tree(text, 0)
    if text[pos:].strip():
        raise ValueError(f"trailing text after tree: {text[pos:]!r}")
    return tree


def _parse_tree(text: str, pos: int) -> tuple[SepTree, int]:
    while pos < len(text) and text[pos] == " ":
        pos += 1
    if pos >= len(text):
        raise ValueError("unexpected end of tree text")
    ch = text[pos]
    if ch == "1":
        return LEAF, pos + 1
    if ch not in "+-":
        raise ValueError(f"unexpected character {ch!r} at position {pos}")
    kind = SUM_KIND if ch == "+" else SKEW_KIND
    pos += 1
    if pos >= len(text) or text[pos] != "(":
        raise ValueError(f"expected '(' at position {pos}")
    pos += 1
    children = []
    while True:
        child, pos = _parse_tree(text, pos)
        children.append(child)
        while pos < len(text) and text[pos] == " ":
            pos += 1
        if pos >= len(text):
            raise ValueError("unterminated tree node")
        if text[pos] == ",":
            pos += 1
            continue
        if text[pos] == ")":
            return SepTree(kind, tuple(children)), pos + 1
        raise ValueError(f"unexpected character {text[pos]!r} at position {pos}")


def is_separable(pi: Perm) -> bool:
    """Equivalent to avoiding both 2413 and 3142; empty counts vacuously."""
    if not pi:
        return True
    return build_tree(pi) is not None


def inflate(pi: Perm, parts: list[Perm] | tuple[Perm, ...]) -> Perm:
    """Replace each point of pi with a block patterned on the matching part."""
    if len(parts) != len(pi):
        raise ValueError(f"need {len(pi)} parts, got {len(parts)}")
    if any(len(p) == 0 for p in parts):
        raise ValueError("cannot inflate by the empty permutation")
    # Points take value ranges stacked in the order of their pi-values.
    order = sorted(range(len(pi)), key=lambda i: pi[i])
    offset = [0] * len(pi)
    total = 0
    for i in order:
        offset[i] = total
        total += len(parts[i])
    out: list[int] = []
    for i, block in enumerate(parts):
        out.extend(offset[i] + v for v in block)
    return tuple(out)


def is_in_x(pi: Perm) -> bool:
    """Membership in Av(2143, 2413, 3142, 3412), the separable skew-merged class."""
    return avoids_all(pi, X_BASIS)


def is_in_x_inflation(pi: Perm, u: USpec) -> bool:
    """Membership in the inflation of the X class by U.

    Recursive decision: pi belongs iff pi is in U, or pi splits as a direct
    or skew sum whose one part is in U and whose other part belongs
    recursively.  All subproblems are contiguous windows of pi, so the
    recursion is tabulated over (start, end) windows, shortest first.
    """
    n = len(pi)
    if n == 0:
        return False
    # mn[i][j], mx[i][j]: min/max of pi[i:j]
    mn = [[0] * (n + 1) for _ in range(n)]
    mx = [[0] * (n + 1) for _ in range(n)]
    for i in range(n):
        lo = hi = pi[i]
        mn[i][i + 1] = lo
        mx[i][i + 1] = hi
        for j in range(i + 2, n + 1):
            v = pi[j - 1]
            if v < lo:
                lo = v
            if v > hi:
                hi = v
            mn[i][j] = lo
            mx[i][j] = hi
    in_u = [[False] * (n + 1) for _ in range(n)]
    member = [[False] * (n + 1) for _ in range(n)]
    for length in range(1, n + 1):
        for i in range(n - length + 1):
            j = i + length
            ok = u.window_member(pi, i, j)
            in_u[i][j] = ok
            if not ok and length > 1:
                pmax = pmin = pi[i]
                for k in range(i + 1, j):
                    if pmax < mn[k][j]:  # pi[i:k] (+) pi[k:j]
                        if (in_u[i][k] and member[k][j]) or (member[i][k] and in_u[k][j]):
                            ok = True
                            break
                    elif pmin > mx[k][j]:  # pi[i:k] (-) pi[k:j]
                        if (in_u[i][k] and member[k][j]) or (member[i][k] and in_u[k][j]):
                            ok = True
                            break
                    v = pi[k]
                    if v > pmax:
                        pmax = v
                    elif v < pmin:
                        pmin = v
            member[i][j] = ok
    return member[0][n]

"""Rational generating functions for restricted inflations of the X class.

The X class is Av(2143, 2413, 3142, 3412).  For a supported inflating class
U and a finite basis B, the engine computes the exact rational generating
function of {pi in X[U] : pi avoids B}.

The method: take the property family
    P = {sum-decomposable, skew-decomposable}
        union {Av(delta) : delta in the pattern closure of B},
which is closed under querying sums and skews -- the properties of a sum or
skew of two permutations are determined by the properties of the parts.
Classify permutations by their property profile (the subset of P they
satisfy), set up one unknown per achievable profile for the generating
function of the X[U] members with exactly that profile, and read off the
linear equations that the unique first/last-block decomposition of sum- and
skew-decomposable members imposes.  The system matrix has entries vanishing
at x = 0, so it solves exactly over the rational-function field, and summing
the unknowns whose profile includes Av(beta) for every basis element beta
gives the target generating function.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .counting import ClassSpec
from .perms import (
    Perm,
    closure,
    contains,
    decreasing_perm,
    increasing_perm,
    is_decreasing,
    is_increasing,
    is_skew_decomposable,
    is_sum_decomposable,
)
from .ratfun import (
    Poly,
    POLY_X,
    RationalFunction,
    RF_ONE,
    RF_X,
    RF_ZERO,
)
from .uclass import USpec, TRIVIAL, FINITE, INCREASING, DECREASING

SUM_BIT = 1  # profile bit: sum decomposable
SKEW_BIT = 2  # profile bit: skew decomposable

DEFAULT_PROFILE_CAP = 4096


class ProfileLimitError(RuntimeError):
    """Raised when the achievable-profile closure exceeds the configured cap."""


class PropertySet:
    """The property family for a basis: decomposability marks plus one
    avoidance property per pattern in the basis closure.

    Profiles are bitmasks: bit 0 is sum-decomposability, bit 1 is
    skew-decomposability, bit i+2 is avoidance of ``patterns[i]``.  Patterns
    are sorted by (length, values) so the encoding is deterministic.
    """

    def __init__(self, basis: tuple[Perm, ...] | list[Perm] | set[Perm]):
        self.patterns: tuple[Perm, ...] = tuple(
            sorted(closure(basis), key=lambda p: (len(p), p))
        )
        self._bit = {p: 1 << (i + 2) for i, p in enumerate(self.patterns)}
        # For each pattern delta, its nontrivial splits delta = gamma (+) iota
        # (and the skew analogue) as pairs of avoidance bits.  The closure is
        # downward closed, so every part is itself an indexed pattern.
        self._sum_splits: list[tuple[tuple[int, int], ...]] = []
        self._skew_splits: list[tuple[tuple[int, int], ...]] = []
        for d in self.patterns:
            n = len(d)
            ssp = []
            ksp = []
            top = 0
            bottom = n + 1
            for k in range(1, n):
                v = d[k - 1]
                if v > top:
                    top = v
                if v < bottom:
                    bottom = v
                if top == k:
                    gamma = d[:k]
                    iota = tuple(x - k for x in d[k:])
                    ssp.append((self._bit[gamma], self._bit[iota]))
                elif bottom == n - k + 1:
                    gamma = tuple(x - (n - k) for x in d[:k])
                    iota = d[k:]
                    ksp.append((self._bit[gamma], self._bit[iota]))
            self._sum_splits.append(tuple(ssp))
            self._skew_splits.append(tuple(ksp))
        self._sum_memo: dict[tuple[int, int], int] = {}
        self._skew_memo: dict[tuple[int, int], int] = {}

    @property
    def size(self) -> int:
        return 2 + len(self.patterns)

    def avoidance_bit(self, pattern: Perm) -> int:
        return self._bit[pattern]

    def profile_of(self, pi: Perm) -> int:
        if not pi:
            raise ValueError("the empty permutation has no profile")
        q = 0
        if is_sum_decomposable(pi):
            q |= SUM_BIT
        if is_skew_decomposable(pi):
            q |= SKEW_BIT
        for i, d in enumerate(self.patterns):
            if not contains(pi, d):
                q |= 1 << (i + 2)
        return q

    def combine_sum(self, q1: int, q2: int) -> int:
        """Profile of alpha (+) beta from the profiles of nonempty alpha, beta.

        A sum avoids delta iff every way of splitting delta across the two
        blocks is blocked: the whole of delta must be avoided by each side
        (the empty splits), and for each nontrivial split gamma (+) iota the
        left part must avoid gamma or the right part must avoid iota.
        """
        key = (q1, q2)
        cached = self._sum_memo.get(key)
        if cached is not None:
            return cached
        out = SUM_BIT
        for i, splits in enumerate(self._sum_splits):
            bit = 1 << (i + 2)
            if q1 & bit and q2 & bit:
                for gbit, ibit in splits:
                    if not (q1 & gbit or q2 & ibit):
                        break
                else:
                    out |= bit
        self._sum_memo[key] = out
        return out

    def combine_skew(self, q1: int, q2: int) -> int:
        key = (q1, q2)
        cached = self._skew_memo.get(key)
        if cached is not None:
            return cached
        out = SKEW_BIT
        for i, splits in enumerate(self._skew_splits):
            bit = 1 << (i + 2)
            if q1 & bit and q2 & bit:
                for gbit, ibit in splits:
                    if not (q1 & gbit or q2 & ibit):
                        break
                else:
                    out |= bit
        self._skew_memo[key] = out
        return out

    def profile_names(self, q: int) -> list[str]:
        names = []
        if q & SUM_BIT:
            names.append("sum-decomposable")
        if q & SKEW_BIT:
            names.append("skew-decomposable")
        for i, d in enumerate(self.patterns):
            if q & (1 << (i + 2)):
                names.append("avoids " + "".join(map(str, d)))
        return names


def _monotone_stable_length(pset: PropertySet, increasing: bool) -> int:
    """Length past which all longer monotone permutations share one profile."""
    test = is_increasing if increasing else is_decreasing
    longest = max((len(p) for p in pset.patterns if test(p)), default=0)
    return max(2, longest + 1)


def u_profile_gfs(u: USpec, pset: PropertySet) -> dict[int, RationalFunction]:
    """Generating function of {pi in U : profile(pi) = Q} for each profile
    Q realized in U.  Every value has zero constant term."""
    gfs: dict[int, RationalFunction] = {}

    def add(q: int, f: RationalFunction) -> None:
        gfs[q] = gfs.get(q, RF_ZERO) + f

    if u.kind == TRIVIAL:
        add(pset.profile_of((1,)), RF_X)
        return gfs
    if u.kind == FINITE:
        by_profile: dict[int, list[int]] = {}
        for p in sorted(u.members, key=lambda p: (len(p), p)):
            by_profile.setdefault(pset.profile_of(p), []).append(len(p))
        for q, lengths in by_profile.items():
            coeffs = [0] * (max(lengths) + 1)
            for n in lengths:
                coeffs[n] += 1
            add(q, RationalFunction(Poly(coeffs)))
        return gfs
    if u.kind in (INCREASING, DECREASING):
        make = increasing_perm if u.kind == INCREASING else decreasing_perm
        n0 = _monotone_stable_length(pset, u.kind == INCREASING)
        for n in range(1, n0):
            add(pset.profile_of(make(n)), RationalFunction(Poly([0] * n + [1])))
        # Lengths n0, n0+1, ... all share the profile of length n0.
        tail = RationalFunction(Poly([0] * n0 + [1]), Poly([1, -1]))
        add(pset.profile_of(make(n0)), tail)
        return gfs
    raise ValueError(f"unsupported U kind: {u.kind}")


def indecomposable_gfs(u: USpec) -> tuple[RationalFunction, RationalFunction]:
    """Generating functions of the sum-indecomposable and skew-indecomposable
    members of U."""
    if u.kind == TRIVIAL:
        return RF_X, RF_X
    if u.kind == INCREASING:
        return RF_X, RationalFunction(POLY_X, Poly([1, -1]))
    if u.kind == DECREASING:
        return RationalFunction(POLY_X, Poly([1, -1])), RF_X
    if u.kind == FINITE:
        sum_counts: dict[int, int] = {}
        skew_counts: dict[int, int] = {}
        for p in u.members:
            if not is_sum_decomposable(p):
                sum_counts[len(p)] = sum_counts.get(len(p), 0) + 1
            if not is_skew_decomposable(p):
                skew_counts[len(p)] = skew_counts.get(len(p), 0) + 1

        def poly_of(counts: dict[int, int]) -> RationalFunction:
            if not counts:
                return RF_ZERO
            coeffs = [0] * (max(counts) + 1)
            for n, c in counts.items():
                coeffs[n] = c
            return RationalFunction(Poly(coeffs))

        return poly_of(sum_counts), poly_of(skew_counts)
    raise ValueError(f"unsupported U kind: {u.kind}")


def x_inflation_gf(
    f_sum_indec: RationalFunction, f_skew_indec: RationalFunction
) -> RationalFunction:
    """Generating function of X[U] from the generating functions of U's sum-
    and skew-indecomposable members:

        g = (x - fs^2 - fk^2) / (1 - 2 fs + fs^2 - 2 fk + fk^2)

    Valid when the only member of U that is both sum- and skew-indecomposable
    is the single point (true for every built-in monotone or trivial U).
    """
    for f in (f_sum_indec, f_skew_indec):
        if not f.is_zero and not f.has_zero_constant_term():
            raise ValueError("indecomposable generating functions must vanish at 0")
    fs, fk = f_sum_indec, f_skew_indec
    den = RF_ONE - 2 * fs + fs * fs - 2 * fk + fk * fk
    if den.is_zero:
        raise ZeroDivisionError("degenerate inflation denominator")
    return (RF_X - fs * fs - fk * fk) / den


@dataclass(eq=False)
class ProfileSystem:
    """The assembled linear system h = M h + v over achievable profiles."""

    properties: PropertySet
    profiles: tuple[int, ...]
    f: dict[int, RationalFunction]
    sum_table: dict[tuple[int, int], int]
    skew_table: dict[tuple[int, int], int]
    matrix: list[list[RationalFunction]] = field(repr=False)
    vector: list[RationalFunction] = field(repr=False)

    def index(self, q: int) -> int:
        return self.profiles.index(q)

    def solve(self) -> dict[int, RationalFunction]:
        from .ratfun import solve_linear_system

        h = solve_linear_system(self.matrix, self.vector)
        return dict(zip(self.profiles, h))


def build_profile_system(
    u: USpec, spec: ClassSpec, max_profiles: int = DEFAULT_PROFILE_CAP
) -> ProfileSystem:
    """Construct the property family from the basis closure, close the
    profiles of U's members under sum/skew combination, and assemble the
    linear system for the profile generating functions of X[U]."""
    pset = PropertySet(spec.basis)
    f = u_profile_gfs(u, pset)

    achievable: set[int] = set(f)
    frontier = list(achievable)
    while frontier:
        fresh: set[int] = set()
        for a in frontier:
            for b in achievable:
                for c in (
                    pset.combine_sum(a, b),
                    pset.combine_sum(b, a),
                    pset.combine_skew(a, b),
                    pset.combine_skew(b, a),
                ):
                    if c not in achievable and c not in fresh:
                        fresh.add(c)
        if len(achievable) + len(fresh) > max_profiles:
            raise ProfileLimitError(
                f"more than {max_profiles} achievable profiles; "
                "raise max_profiles to proceed"
            )
        achievable |= fresh
        frontier = list(fresh)

    profiles = tuple(sorted(achievable))
    idx = {q: i for i, q in enumerate(profiles)}
    m = len(profiles)
    matrix = [[RF_ZERO] * m for _ in range(m)]
    vector = [RF_ZERO] * m

    def assemble(indec_bit: int, combine) -> None:
        # Decomposable members split off an indecomposable U-block at the
        # front or the back; both at once is the overlap, subtracted with the
        # middle either a proper member (trilinear terms, into M) or empty
        # (bilinear constants, into v).
        f_parts = [(r, fr) for r, fr in sorted(f.items()) if not r & indec_bit]
        for r, fr in f_parts:
            for s in profiles:
                matrix[idx[combine(r, s)]][idx[s]] += fr
        for t, ft in f_parts:
            for s in profiles:
                matrix[idx[combine(s, t)]][idx[s]] += ft
        for r, fr in f_parts:
            for t, ft in f_parts:
                prod = fr * ft
                for s in profiles:
                    matrix[idx[combine(combine(r, s), t)]][idx[s]] -= prod
                vector[idx[combine(r, t)]] -= prod

    assemble(SUM_BIT, pset.combine_sum)
    assemble(SKEW_BIT, pset.combine_skew)

    # Profiles with neither mark are realized only by U's doubly
    # indecomposable members, so those unknowns are pinned to f.
    for q in profiles:
        if not q & (SUM_BIT | SKEW_BIT):
            vector[idx[q]] = f.get(q, RF_ZERO)

    sum_table = {
        (a, b): pset.combine_sum(a, b) for a in profiles for b in profiles
    }
    skew_table = {
        (a, b): pset.combine_skew(a, b) for a in profiles for b in profiles
    }
    return ProfileSystem(pset, profiles, f, sum_table, skew_table, matrix, vector)


def class_gf(
    u: USpec, spec: ClassSpec, max_profiles: int = DEFAULT_PROFILE_CAP
) -> RationalFunction:
    """Exact rational generating function of {pi in X[U] : pi avoids basis},
    counting nonempty permutations."""
    system = build_profile_system(u, spec, max_profiles)
    h = system.solve()
    target = 0
    for beta in spec.basis:
        target |= system.properties.avoidance_bit(beta)
    total = RF_ZERO
    for q, hq in h.items():
        if q & target == target:
            total = total + hq
    return total

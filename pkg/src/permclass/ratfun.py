"""Exact symbolic algebra over the rationals.

Dense polynomials and reduced rational functions with Fraction coefficients,
truncated power series, a fixed-point solver for series functional equations,
and Gaussian elimination over the rational-function field.  No floating point
anywhere; every equality in this module is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Callable, Iterable, Sequence

Scalar = int | Fraction


class Poly:
    """Dense polynomial, coefficients in ascending degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient; None for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def scale(self, factor: Scalar) -> "Poly":
        f = Fraction(factor)
        return Poly(c * f for c in self.coeffs)

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def __call__(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        out = Poly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        dd = other.degree
        lead = other.leading
        rem = list(self.coeffs)
        if len(rem) <= dd:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            quo[i - dd] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] -= f * oc
        return Poly(quo), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("polynomials do not divide exactly")
        return q

    @staticmethod
    def gcd(a: "Poly", b: "Poly") -> "Poly":
        """Monic gcd via the primitive pseudo-remainder sequence.

        Plain Euclidean division over Q suffers severe intermediate
        coefficient swell; working on integer primitive parts keeps the
        elimination in solve_linear_system fast.
        """
        big = _integer_primitive(a.coeffs)
        small = _integer_primitive(b.coeffs)
        if len(big) < len(small):
            big, small = small, big
        while small:
            rem = _int_pseudo_rem(big, small)
            content = 0
            for v in rem:
                content = _int_gcd(content, v)
            if content > 1:
                rem = [v // content for v in rem]
            big, small = small, rem
        g = Poly(big)
        if g.is_zero:
            return g
        return g.scale(1 / g.leading)

    def pretty(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return NotImplemented


def _integer_primitive(coeffs: tuple[Fraction, ...]) -> list[int]:
    """Integer coefficient list after clearing denominators and content."""
    scale = 1
    for c in coeffs:
        scale = scale * c.denominator // _int_gcd(scale, c.denominator)
    ints = [int(c * scale) for c in coeffs]
    content = 0
    for v in ints:
        content = _int_gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Integer pseudo-remainder: reduce a by b, scaling by b's leading
    coefficient instead of dividing, so everything stays integral."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while True:
        while r and r[-1] == 0:
            r.pop()
        dr = len(r) - 1
        if dr < db:
            return r
        coef = r[-1]
        r = [v * lead for v in r]
        for j in range(db + 1):
            r[dr - db + j] -= coef * b[j]


POLY_ZERO = Poly()
POLY_ONE = Poly((1,))
POLY_X = Poly((0, 1))


class RationalFunction:
    """Reduced ratio of polynomials; denominator monic, gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Scalar, den: Poly | Scalar = POLY_ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalFunction needs polynomial or scalar arguments")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = POLY_ZERO, POLY_ONE
        else:
            g = Poly.gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading
            if lead != 1:
                inv = 1 / lead
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(POLY_X)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def valuation(self) -> int | None:
        """Order of vanishing at x = 0; None for the zero function."""
        if self.num.is_zero:
            return None
        return self.num.valuation - self.den.valuation

    def constant_term(self) -> Fraction:
        if self.den.constant == 0:
            raise ZeroDivisionError("pole at x = 0")
        return self.num.constant / self.den.constant

    def has_zero_constant_term(self) -> bool:
        return self.den.constant != 0 and self.num.constant == 0

    def __eq__(self, other: object) -> bool:
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def display_pair(self) -> tuple[list[Fraction], list[Fraction]]:
        """Integer-scaled (num, den) coefficient lists for printing and JSON.

        Scales away coefficient denominators, removes the common integer
        content, and signs the pair so the lowest nonzero denominator
        coefficient is positive.
        """
        if self.is_zero:
            return [], [Fraction(1)]
        coeffs = list(self.num.coeffs) + list(self.den.coeffs)
        scale = 1
        for c in coeffs:
            scale = scale * c.denominator // _int_gcd(scale, c.denominator)
        ints = [c * scale for c in coeffs]
        content = 0
        for c in ints:
            content = _int_gcd(content, int(c))
        if content > 1:
            ints = [c / content for c in ints]
        num = ints[: len(self.num.coeffs)]
        den = ints[len(self.num.coeffs):]
        low = next(c for c in den if c != 0)
        if low < 0:
            num = [-c for c in num]
            den = [-c for c in den]
        return num, den

    def pretty(self, var: str = "x") -> str:
        num, den = self.display_pair()
        num_s = Poly(num).pretty(var)
        if den == [1]:
            return num_s
        return f"({num_s})/({Poly(den).pretty(var)})"

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"


def _as_ratfun(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction, Poly)):
        return RationalFunction(value)
    return NotImplemented


RF_ZERO = RationalFunction(POLY_ZERO)
RF_ONE = RationalFunction(POLY_ONE)
RF_X = RationalFunction(POLY_X)


class PowerSeries:
    """Truncated power series; order = highest tracked exponent.

    Arithmetic truncates to the smaller operand order and never reads beyond
    a series' own truncation.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a power series needs at least the constant coefficient")
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([0] * (order + 1))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls([value] + [0] * order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        if order < 1:
            raise ValueError("order must be at least 1 to represent x")
        return cls([0, 1] + [0] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        return PowerSeries(self.coeffs[: order + 1])

    def first_difference(self, other: "PowerSeries") -> int | None:
        """Smallest index where the two series disagree, or None if equal
        through the smaller truncation order."""
        m = min(self.order, other.order)
        for k in range(m + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def _pair(self, other) -> tuple["PowerSeries", "PowerSeries"]:
        if isinstance(other, (int, Fraction)):
            other = PowerSeries.constant(other, self.order)
        elif not isinstance(other, PowerSeries):
            return NotImplemented, NotImplemented
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PowerSeries", self.coeffs))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self.coeffs)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return PowerSeries(x + y for x, y in zip(a.coeffs, b.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return PowerSeries(x - y for x, y in zip(a.coeffs, b.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        n = a.order
        out = [Fraction(0)] * (n + 1)
        for i, ca in enumerate(a.coeffs):
            if ca == 0:
                continue
            for j in range(n + 1 - i):
                cb = b.coeffs[j]
                if cb != 0:
                    out[i + j] += ca * cb
        return PowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        if b.coeffs[0] == 0:
            raise ZeroDivisionError("series division needs a unit constant term")
        n = a.order
        out: list[Fraction] = []
        for k in range(n + 1):
            acc = a.coeffs[k]
            for j in range(1, k + 1):
                cb = b.coeffs[j]
                if cb != 0:
                    acc -= cb * out[k - j]
            out.append(acc / b.coeffs[0])
        return PowerSeries(out)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order) / self
        return NotImplemented

    def __repr__(self) -> str:
        return f"PowerSeries({list(self.coeffs)!r})"


def series_expand(f: RationalFunction, order: int) -> PowerSeries:
    """Expand f as a power series to the given order via the denominator's
    linear recurrence.  Requires den(0) != 0."""
    d0 = f.den.constant
    if d0 == 0:
        raise ZeroDivisionError("pole at x = 0; cannot expand")
    den = f.den.coeffs
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = f.num.coefficient(k)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / d0)
    return PowerSeries(out)


def solve_fixed_point_series(
    phi: Callable[[PowerSeries], PowerSeries], order: int
) -> PowerSeries:
    """Unique series f with f(0) = 0 and f = phi(f) through the given order.

    Iterates phi from the zero series.  phi must be an x-adic contraction:
    each application has to extend the agreement with the solution by at
    least one order, which is verified as the iteration proceeds.
    """
    current = PowerSeries.zero(order)
    agreement = -1
    for _ in range(order + 2):
        nxt = phi(current).truncate(order)
        if nxt.order != order:
            raise ValueError("functional reduced the truncation order")
        diff = current.first_difference(nxt)
        if diff is None:
            if nxt.coeffs[0] != 0:
                raise ValueError("fixed point has a nonzero constant term")
            return nxt
        if diff <= agreement:
            raise ValueError("functional is not an x-adic contraction")
        agreement = diff
        current = nxt
    raise ValueError("fixed-point iteration failed to converge")


def solve_linear_system(
    matrix: Sequence[Sequence[RationalFunction]], vector: Sequence[RationalFunction]
) -> list[RationalFunction]:
    """Solve (I - M) h = v exactly over the rational-function field.

    Gauss-Jordan elimination with partial pivoting on the lowest order of
    vanishing at x = 0, so systems whose M entries all vanish at 0 always
    pivot on units.
    """
    m = len(vector)
    if len(matrix) != m or any(len(row) != m for row in matrix):
        raise ValueError("matrix shape does not match vector length")
    a = [
        [
            (RF_ONE if i == j else RF_ZERO) - matrix[i][j]
            for j in range(m)
        ]
        for i in range(m)
    ]
    b = list(vector)
    for col in range(m):
        pivot_row = None
        pivot_val = None
        for r in range(col, m):
            val = a[r][col].valuation
            if val is None:
                continue
            if pivot_val is None or val < pivot_val:
                pivot_row, pivot_val = r, val
        if pivot_row is None:
            raise ValueError(f"singular system: no pivot available in column {col}")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            b[col], b[pivot_row] = b[pivot_row], b[col]
        inv = RF_ONE / a[col][col]
        a[col] = [entry * inv for entry in a[col]]
        b[col] = b[col] * inv
        for r in range(m):
            if r == col:
                continue
            factor = a[r][col]
            if factor.is_zero:
                continue
            a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
            b[r] = b[r] - factor * b[col]
    return b

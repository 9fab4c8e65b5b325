import random
from fractions import Fraction

import pytest

from permclass.ratfun import (
    Poly,
    PowerSeries,
    RationalFunction,
    RF_ONE,
    RF_X,
    RF_ZERO,
    series_expand,
    solve_fixed_point_series,
    solve_linear_system,
)


def test_poly_canonical_form():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([]).is_zero
    assert Poly([0]).is_zero
    assert Poly([0, 0, 3]).degree == 2
    assert Poly([0, 0, 3]).valuation == 2
    assert Poly([]).valuation is None


def test_poly_arithmetic():
    x = Poly([0, 1])
    assert (1 + x) * (1 - x) == Poly([1, 0, -1])
    assert (x + 1) ** 3 == Poly([1, 3, 3, 1])
    q, r = divmod(Poly([1, 0, -1]), Poly([1, 1]))
    assert q == Poly([1, -1]) and r.is_zero
    assert Poly.gcd(Poly([1, 0, -1]), Poly([1, 1])) == Poly([1, 1])
    assert Poly([2, 4]).pretty() == "2 + 4x"
    assert Poly([1, -4, 2]).pretty() == "1 - 4x + 2x^2"


def test_ratfun_reduction_examples():
    x2 = RationalFunction(Poly([0, 0, 1]), Poly([1, 1]))
    assert x2.num == Poly([0, 0, 1]) and x2.den == Poly([1, 1])
    f = RationalFunction(Poly([0, 1, 3]), Poly([1, -2]))
    assert f + RF_ZERO == f
    assert RationalFunction(Poly([1, -1])) * RationalFunction(1, Poly([1, -1])) == RF_ONE
    # gcd reduction and monic denominator
    g = RationalFunction(Poly([0, 2, 2]), Poly([2, 2]))
    assert g == RF_X
    h = RationalFunction(Poly([0, 1]), Poly([2, -2]))
    assert h.den.leading == 1
    assert h == RationalFunction(Poly([0, Fraction(1, 2)]), Poly([1, -1]))


def test_ratfun_errors():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Poly([1]), Poly([]))
    with pytest.raises(ZeroDivisionError):
        RF_ONE / RF_ZERO
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Poly([1]), Poly([0, 1])).constant_term()


def test_field_axioms_on_random_triples():
    rng = random.Random(5)

    def rand_rf():
        num = Poly([rng.randint(-4, 4) for _ in range(rng.randint(1, 4))])
        den = Poly([rng.randint(-4, 4) for _ in range(rng.randint(1, 3))])
        if den.is_zero:
            den = Poly([1, 1])
        return RationalFunction(num, den)

    for _ in range(200):
        a, b, c = rand_rf(), rand_rf(), rand_rf()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        if not a.is_zero:
            assert a * (RF_ONE / a) == RF_ONE


def test_series_expand_examples():
    waton = RationalFunction(Poly([1, -3]), Poly([1, -4, 2]))
    assert [int(c) for c in series_expand(waton, 6).coeffs] == [1, 1, 2, 6, 20, 68, 232]
    geo = RationalFunction(Poly([0, 1]), Poly([1, -1]))
    assert [int(c) for c in series_expand(geo, 4).coeffs] == [0, 1, 1, 1, 1]
    x_class = RationalFunction(Poly([0, 1, -2]), Poly([1, -4, 2]))
    assert [int(c) for c in series_expand(x_class, 6).coeffs] == [0, 1, 2, 6, 20, 68, 232]
    with pytest.raises(ZeroDivisionError):
        series_expand(RationalFunction(Poly([1]), Poly([0, 1])), 3)


def test_series_expand_is_multiplicative():
    rng = random.Random(11)
    for _ in range(40):
        f = RationalFunction(
            Poly([rng.randint(-3, 3) for _ in range(3)]),
            Poly([1] + [rng.randint(-3, 3) for _ in range(2)]),
        )
        g = RationalFunction(
            Poly([rng.randint(-3, 3) for _ in range(3)]),
            Poly([1] + [rng.randint(-3, 3) for _ in range(2)]),
        )
        n = 12
        assert series_expand(f * g, n) == series_expand(f, n) * series_expand(g, n)


def test_power_series_basics():
    x = PowerSeries.x(5)
    assert (x + 1).coeffs == (1, 1, 0, 0, 0, 0)
    assert (x * x).coeffs == (0, 0, 1, 0, 0, 0)
    assert ((1 + x) / (1 + x)).coeffs == (1, 0, 0, 0, 0, 0)
    with pytest.raises(ZeroDivisionError):
        x / PowerSeries.zero(5)
    with pytest.raises(IndexError):
        x.coefficient(6)


def test_fixed_point_schroder():
    x = PowerSeries.x(8)
    f = solve_fixed_point_series(lambda f: x + 2 * f * f / (1 + f), 8)
    assert [int(c) for c in f.coeffs[1:]] == [1, 2, 6, 22, 90, 394, 1806, 8558]


def test_fixed_point_catalan():
    x = PowerSeries.x(8)
    f = solve_fixed_point_series(lambda f: x * (1 + f) * (1 + f), 8)
    assert [int(c) for c in f.coeffs[1:]] == [1, 2, 5, 14, 42, 132, 429, 1430]


def test_fixed_point_constant_functional():
    x = PowerSeries.x(6)
    assert solve_fixed_point_series(lambda f: x, 6) == x


def test_fixed_point_rejects_non_contraction():
    with pytest.raises(ValueError, match="contraction"):
        solve_fixed_point_series(lambda f: f + 1, 5)


def test_fixed_point_reproduces_itself():
    x = PowerSeries.x(10)
    phi = lambda f: x + 2 * f * f / (1 + f)
    f = solve_fixed_point_series(phi, 10)
    assert phi(f) == f


def test_linear_solver_identity_and_waton():
    v = [RationalFunction(Poly([0, 1])), RationalFunction(Poly([2]))]
    zero = [[RF_ZERO, RF_ZERO], [RF_ZERO, RF_ZERO]]
    assert solve_linear_system(zero, v) == v
    # one-unknown instance of the inflation equation with both indecomposable
    # generating functions equal to x
    m = [[RationalFunction(Poly([0, 4, -2]))]]
    rhs = [RationalFunction(Poly([0, 1, -2]))]
    (h,) = solve_linear_system(m, rhs)
    assert h == RationalFunction(Poly([0, 1, -2]), Poly([1, -4, 2]))


def test_linear_solver_residual_is_exactly_zero():
    rng = random.Random(3)
    for _ in range(25):
        size = rng.randint(1, 4)
        m = [
            [
                RationalFunction(
                    Poly([0] + [rng.randint(-3, 3) for _ in range(3)]),
                    Poly([1] + [rng.randint(-2, 2) for _ in range(2)]),
                )
                for _ in range(size)
            ]
            for _ in range(size)
        ]
        v = [
            RationalFunction(
                Poly([rng.randint(-3, 3) for _ in range(3)]),
                Poly([1, rng.randint(-2, 2)]),
            )
            for _ in range(size)
        ]
        h = solve_linear_system(m, v)
        for i in range(size):
            residual = h[i] - sum(
                (m[i][j] * h[j] for j in range(size)), RF_ZERO
            ) - v[i]
            assert residual.is_zero


def test_linear_solver_singularity_reports_column():
    one = RF_ONE
    with pytest.raises(ValueError, match="column 0"):
        solve_linear_system([[one]], [RF_X])  # I - M == 0

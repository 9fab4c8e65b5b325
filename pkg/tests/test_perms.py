import random
from functools import reduce

import pytest

from conftest import all_perms, naive_contains, perms_up_to
from permclass.perms import (
    avoids_all,
    closure,
    complement,
    contains,
    delete_point,
    direct_sum,
    format_perm,
    inverse,
    is_skew_decomposable,
    is_sum_decomposable,
    parse_perm,
    perm,
    reverse,
    skew_components,
    skew_sum,
    standardize,
    sum_components,
)


def test_perm_validation():
    assert perm([2, 1]) == (2, 1)
    assert perm([]) == ()
    with pytest.raises(ValueError):
        perm([1, 3])
    with pytest.raises(ValueError):
        perm([1, 1])
    with pytest.raises(ValueError):
        perm([0, 1])


def test_parse_formats():
    assert parse_perm("8,9,1,6,7,3,4,2") == (7, 8, 1, 5, 6, 3, 4, 2)
    assert parse_perm("2413") == (2, 4, 1, 3)
    assert parse_perm("2,4,1,3") == (2, 4, 1, 3)
    assert format_perm((2, 4, 1, 3)) == "2,4,1,3"
    assert format_perm((2, 4, 1, 3), compact=True) == "2413"
    with pytest.raises(ValueError, match="x"):
        parse_perm("1,x,2")
    with pytest.raises(ValueError, match="duplicate"):
        parse_perm("1,2,2")
    with pytest.raises(ValueError):
        parse_perm("")


def test_standardize():
    assert standardize((9, 1, 6, 7, 2)) == (5, 1, 3, 4, 2)
    assert standardize(()) == ()
    assert standardize((42,)) == (1,)


def test_contains_paper_example():
    # 89167342 contains 51342, witnessed by the subsequence 91672.
    assert contains(parse_perm("8,9,1,6,7,3,4,2"), (5, 1, 3, 4, 2))


def test_contains_basics():
    assert contains((1, 2, 3, 4, 5, 6), ())
    assert not contains((1, 2, 3, 4, 5, 6), (2, 1))
    assert contains((2, 4, 1, 3), (2, 4, 1, 3))
    assert not contains((1, 2), (1, 2, 3))


def test_contains_matches_subsequence_oracle():
    patterns = [p for k in range(1, 4) for p in all_perms(k)]
    for pi in perms_up_to(5):
        for sigma in patterns:
            assert contains(pi, sigma) == naive_contains(pi, sigma), (pi, sigma)


def test_contains_transitive_spot():
    rng = random.Random(7)
    pool = list(perms_up_to(6))
    for _ in range(200):
        a, b, c = (rng.choice(pool) for _ in range(3))
        if contains(a, b) and contains(b, c):
            assert contains(a, c)


def test_sums_match_figure_values():
    a = (1, 2, 5, 4, 3)
    b = (3, 2, 4, 5, 1)
    assert direct_sum(a, b) == (1, 2, 5, 4, 3, 8, 7, 9, 10, 6)
    assert skew_sum(a, b) == (6, 7, 10, 9, 8, 3, 2, 4, 5, 1)


def test_sums_identity():
    for p in [(), (1,), (2, 1, 3)]:
        assert direct_sum((), p) == p == direct_sum(p, ())
        assert skew_sum((), p) == p == skew_sum(p, ())


def test_symmetries_are_involutions():
    for pi in perms_up_to(6):
        assert reverse(reverse(pi)) == pi
        assert complement(complement(pi)) == pi
        assert inverse(inverse(pi)) == pi
    assert reverse((2, 3, 1)) == (1, 3, 2)
    assert complement((2, 3, 1)) == (2, 1, 3)
    assert inverse((2, 3, 1)) == (3, 1, 2)


def test_symmetries_preserve_containment():
    rng = random.Random(21)
    pool = list(perms_up_to(7))
    for _ in range(300):
        pi = rng.choice(pool)
        sigma = rng.choice(pool)
        got = contains(pi, sigma)
        assert got == contains(reverse(pi), reverse(sigma))
        assert got == contains(complement(pi), complement(sigma))
        assert got == contains(inverse(pi), inverse(sigma))


def test_counting_symmetry_of_length3_avoiders():
    # the four classes avoiding one non-monotone length-3 pattern are
    # equinumerous at every length
    from permclass.counting import ClassSpec, enumerate_av

    tables = [
        enumerate_av(ClassSpec.from_patterns([p]), 8).counts
        for p in [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)]
    ]
    assert tables[0] == tables[1] == tables[2] == tables[3]


def test_sum_components_examples():
    assert sum_components((1, 2, 5, 4, 3)) == [(1,), (1,), (3, 2, 1)]
    assert sum_components((2, 4, 1, 3)) == [(2, 4, 1, 3)]
    assert skew_components(skew_sum((1,), (2, 4, 1, 3)))[0] == (1,)
    with pytest.raises(ValueError):
        sum_components(())
    with pytest.raises(ValueError):
        skew_components(())


def test_components_roundtrip_and_exclusivity():
    for pi in perms_up_to(7):
        sparts = sum_components(pi)
        kparts = skew_components(pi)
        assert reduce(direct_sum, sparts) == pi
        assert reduce(skew_sum, kparts) == pi
        # never decomposable both ways
        assert not (len(sparts) > 1 and len(kparts) > 1)
        assert is_sum_decomposable(pi) == (len(sparts) > 1)
        assert is_skew_decomposable(pi) == (len(kparts) > 1)
        if len(pi) == 1:
            assert sparts == kparts == [(1,)]


def test_closure():
    assert closure([(2, 1)]) == {(1,), (2, 1)}
    assert closure([]) == set()
    got = closure([(2, 4, 1, 3)])
    for p in got:
        assert naive_contains((2, 4, 1, 3), p)
    for k in range(1, 5):
        for p in all_perms(k):
            assert (p in got) == naive_contains((2, 4, 1, 3), p)


def test_delete_point():
    assert delete_point((2, 4, 1, 3), 1) == (2, 1, 3)
    assert avoids_all((1, 2, 3), [(2, 1)])

import pytest
from hypothesis import given, strategies as st

from sievelab.errors import DomainError
from sievelab.wheel import (
    EvenClass,
    EvenKind,
    WheelClass,
    classify_even,
    composite_progressions,
    index_of,
    term,
)
from oracles import is_prime


@pytest.mark.parametrize("klass, i, expected", [(WheelClass.A, 1, 5), (WheelClass.B, 1, 7), (WheelClass.A, 6, 35)])
def test_term(klass, i, expected):
    assert term(klass, i) == expected


def test_term_rejects_zero_index():
    with pytest.raises(DomainError):
        term(WheelClass.A, 0)


@pytest.mark.parametrize("g, expected", [(28, (EvenKind.G1, 5)), (94, (EvenKind.G1, 16)), (6, (EvenKind.G2, 1)), (4, (EvenKind.G1, 1)), (8, (EvenKind.G3, 1))])
def test_classify_even(g, expected):
    ec = classify_even(g)
    assert (ec.klass, ec.m) == expected
    assert ec.value == g


@pytest.mark.parametrize("g", [3, 2, 0, -4, 11])
def test_classify_even_rejects(g):
    with pytest.raises(DomainError):
        classify_even(g)


@given(st.sampled_from(list(EvenKind)), st.integers(1, 10**6))
def test_classify_round_trip(klass, m):
    ec = EvenClass(klass, m)
    assert classify_even(ec.value) == ec


@given(st.integers(5, 10**6).filter(lambda n: n % 6 in (1, 5)))
def test_index_of_inverts_term(n):
    klass, i = index_of(n)
    assert term(klass, i) == n


def _scan_first(p, offset):
    return next(i for i in range(1, p + 1) if (6 * i + offset) % p == 0)


@pytest.mark.parametrize("p, a_first, b_first", [(5, 1, 4), (7, 6, 1), (11, 2, 9)])
def test_composite_progressions_examples(p, a_first, b_first):
    desc_a, desc_b = composite_progressions(p)
    assert (desc_a.target, desc_b.target) == (WheelClass.A, WheelClass.B)
    assert desc_a.first_index == a_first == _scan_first(p, -1)
    assert desc_b.first_index == b_first == _scan_first(p, 1)
    assert desc_a.common_difference == desc_b.common_difference == p


def test_p7_first_composite_b_term_is_49():
    # the normalized residue is 1 (b_1 = 7 itself); the first composite lies one period on
    desc_b = composite_progressions(7)[1]
    assert term(WheelClass.B, desc_b.first_index + 7) == 49


@pytest.mark.parametrize("p", [q for q in range(5, 400) if is_prime(q)])
def test_progressions_match_direct_scan(p):
    desc_a, desc_b = composite_progressions(p)
    for i in range(1, 10**4 + 1):
        assert ((6 * i - 1) % p == 0) == desc_a.contains(i)
        assert ((6 * i + 1) % p == 0) == desc_b.contains(i)
    assert 0 < desc_a.first_index <= p and 0 < desc_b.first_index <= p
    assert desc_a.first_index % p != desc_b.first_index % p


@pytest.mark.parametrize("p", [1, 2, 3, 4, 9, 25, 35])
def test_composite_progressions_rejects(p):
    with pytest.raises(DomainError):
        composite_progressions(p)

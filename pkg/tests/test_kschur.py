from hypothesis import given, settings, strategies as st
import pytest

from algebra.errors import ShapeError
from algebra.kschur import (
    bounded_from_core,
    core_from_bounded,
    h_in_kschur,
    is_core,
    kostka_matrix,
    kschur_in_h,
    rectangle_factorization_check,
    weak_pieri_targets,
)
from algebra.polyring import H, parse
from algebra.symfunc import partitions_of, schur_to_h


@st.composite
def bounded_partition_strategy(draw, max_size=8):
    k = draw(st.integers(min_value=1, max_value=5))
    total = draw(st.integers(min_value=0, max_value=max_size))
    la = draw(st.sampled_from(list(partitions_of(total, max_part=k))))
    return la, k


def test_cores():
    assert is_core((3, 1), 2)
    assert not is_core((2, 1), 2)
    assert core_from_bounded((2, 1), 2) == (3, 1)
    assert bounded_from_core((3, 1), 2) == (2, 1)
    with pytest.raises(ShapeError):
        core_from_bounded((3,), 2)
    with pytest.raises(ShapeError):
        bounded_from_core((2, 1), 2)


@settings(max_examples=200, deadline=None)
@given(case=bounded_partition_strategy())
def test_core_bijection(case):
    la, k = case
    core = core_from_bounded(la, k)
    assert is_core(core, k)
    assert bounded_from_core(core, k) == la


def test_weak_pieri_small():
    assert weak_pieri_targets((1,), 1, 2) == frozenset({(2,), (1, 1)})
    assert weak_pieri_targets((), 2, 2) == frozenset({(2,)})
    with pytest.raises(ShapeError):
        weak_pieri_targets((), 3, 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_kostka_is_unitriangular(k):
    for degree in range(7):
        matrix = kostka_matrix(degree, k)
        for mu, column in matrix.items():
            assert column[mu] == 1
            assert all(nu >= mu for nu in column)


def test_h_in_kschur_is_cached_as_sorted_pairs():
    assert h_in_kschur((1, 1), 2) == (((1, 1), 1), ((2,), 1))


@pytest.mark.parametrize("a", [0, 1, 2])
@pytest.mark.parametrize("b", [0, 1, 2])
def test_rank_three_closed_forms(a, b):
    h1, h2 = parse("h1", H(3)), parse("h2", H(3))
    e2 = h1 ** 2 - h2
    assert kschur_in_h((2,) * a + (1,) * (2 * b), 3) == h2 ** a * e2 ** b
    assert kschur_in_h((2,) * a + (1,) * (2 * b + 1), 3) == h2 ** a * e2 ** b * h1


def test_cli_example():
    assert kschur_in_h((2, 1), 3) == parse("h2*h1", H(3))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_small_shapes_are_plain_schur(n):
    for total in range(n):
        for la in partitions_of(total):
            assert kschur_in_h(la, n) == schur_to_h(la, n)


def test_rank_two_is_a_power_of_h1():
    assert kschur_in_h((1, 1, 1), 2) == parse("h1^3", H(2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rectangle_factorization(n):
    for la in [(), (1,), (2, 1), (1, 1)]:
        if la and la[0] > n - 1:
            continue
        for i in range(1, n):
            assert rectangle_factorization_check(la, i, n)


def test_unbounded_shape():
    with pytest.raises(ShapeError):
        kschur_in_h((3,), 3)

from hypothesis import given, settings, strategies as st
import pytest

from algebra.errors import NotHomogeneous, ShapeError
from algebra.polyring import H, parse
from algebra.symfunc import (
    as_partition,
    conjugate,
    dual_jacobi_trudi,
    elementary,
    h,
    is_horizontal_strip,
    partitions_of,
    perp,
    rect_clipped_partition,
    rect_clipped_schur,
    rect_partition,
    rect_schur,
    render_expansion,
    schur_expand,
    schur_sum,
    schur_to_h,
    skew_schur_to_h,
    size,
)


@st.composite
def partition_strategy(draw, max_size=6):
    total = draw(st.integers(min_value=0, max_value=max_size))
    options = list(partitions_of(total))
    return draw(st.sampled_from(options))


def test_truncated_h():
    ring = H(3).ring
    assert h(0, 3) == ring.one
    assert h(3, 3) == ring.zero
    assert h(-1, 3) == ring.zero


def test_as_partition_rejects_increasing():
    assert as_partition([2, 1, 0]) == (2, 1)
    with pytest.raises(ShapeError):
        as_partition([1, 2])


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()


def test_partitions_are_lex_decreasing():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(4, max_part=2, max_len=2)) == [(2, 2)]


def test_rectangles_at_rank_three():
    assert rect_partition(1, 3) == (1, 1)
    assert rect_partition(2, 3) == (2,)
    assert rect_partition(0, 3) == ()
    assert rect_clipped_partition(1, 3) == (1,)
    assert rect_schur(1, 3) == parse("h1^2 - h2", H(3))
    assert rect_schur(2, 3) == parse("h2", H(3))
    assert rect_schur(3, 3) == H(3).ring.one
    assert rect_clipped_schur(0, 3) == H(3).ring.zero
    assert rect_clipped_schur(2, 3) == parse("h1", H(3))
    with pytest.raises(ShapeError):
        rect_partition(4, 3)


def test_jacobi_trudi_truncation():
    # h3 = 0 when n = 3
    assert schur_to_h((2, 2), 3) == parse("h2^2", H(3))
    assert schur_to_h((3,), 3) == H(3).ring.zero
    assert elementary(2, 3) == parse("h1^2 - h2", H(3))


def test_schur_expand_of_h1_squared():
    expansion = schur_expand(parse("h1^2", H(3)))
    assert expansion == {(2,): 1, (1, 1): 1}
    assert render_expansion(expansion) == "s[2] + s[1,1]"


def test_schur_expand_rejects_mixed_degree():
    with pytest.raises(NotHomogeneous):
        schur_expand(parse("h1 + h2", H(3)))


def test_perp_of_a_single_box():
    assert perp((1,), {(2, 1): 1}, 5) == {(2,): 1, (1, 1): 1}


def test_skew_outside_is_zero():
    assert skew_schur_to_h((1,), (2,), 4) == H(4).ring.zero


@settings(max_examples=200, deadline=None)
@given(la=partition_strategy(), n=st.integers(min_value=3, max_value=6))
def test_dual_jacobi_trudi(la, n):
    assert dual_jacobi_trudi(la, n) == schur_to_h(la, n)


@settings(max_examples=200, deadline=None)
@given(la=partition_strategy(max_size=5), n=st.integers(min_value=3, max_value=6))
def test_schur_expand_inverts_jacobi_trudi(la, n):
    s = schur_to_h(la, n)
    if la and la[0] >= n:
        assert not s
    else:
        assert schur_expand(s) == {la: 1}
        assert schur_sum({la: 1}, n) == s


@settings(max_examples=200, deadline=None)
@given(la=partition_strategy(max_size=4), r=st.integers(min_value=1, max_value=3))
def test_pieri_rule(la, r):
    n = 6
    expected = {
        mu: 1
        for mu in partitions_of(size(la) + r, max_part=n - 1)
        if is_horizontal_strip(mu, la)
    }
    assert schur_expand(h(r, n) * schur_to_h(la, n)) == expected

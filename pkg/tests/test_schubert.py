from hypothesis import given, settings, strategies as st
import pytest

from algebra.errors import AlphabetMismatch, NotInSpan, ShapeError
from algebra.locring import LocElem, loc_eq, phi, rect_inverse
from algebra.polyring import XQ, H, X, from_terms, parse, render
from algebra.schubert import (
    apply_word,
    as_perm,
    compose,
    descent_set,
    divided_difference,
    dual_partition,
    e_monomial,
    elementary_expansion,
    elementary_substitution_image,
    grassmannian_perm,
    inverse,
    length,
    longest,
    permutations,
    phi_of_quantum_schubert,
    prime,
    quantize,
    quantum_e,
    quantum_schubert,
    quantum_schur,
    reduced_word,
    schubert_poly,
    specialize_q_to_zero,
    staircase,
    w0_omega,
)
from algebra.symfunc import partitions_of

CLASSICAL_RANK_THREE = {
    (1, 2, 3): "1",
    (2, 1, 3): "x1",
    (1, 3, 2): "x1 + x2",
    (2, 3, 1): "x1*x2",
    (3, 1, 2): "x1^2",
    (3, 2, 1): "x1^2*x2",
}

QUANTUM_RANK_THREE = {
    (1, 2, 3): "1",
    (2, 1, 3): "x1",
    (1, 3, 2): "x1 + x2",
    (2, 3, 1): "x1*x2 + q1",
    (3, 1, 2): "x1^2 - q1",
    (3, 2, 1): "x1^2*x2 + q1*x1",
}


def test_permutation_basics():
    assert as_perm([2, 1, 3]) == (2, 1, 3)
    with pytest.raises(ShapeError):
        as_perm([1, 1, 2])
    assert compose((2, 1, 3), (1, 3, 2)) == (2, 3, 1)
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert descent_set((1, 4, 3, 2)) == {2, 3}
    assert length(longest(4)) == 6
    assert prime((1, 3, 2)) == (3, 2, 1)
    assert w0_omega(1, 3) == (3, 1, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduced_words_rebuild_the_permutation(n):
    for w in permutations(n):
        for last in (False, True):
            word = reduced_word(w, last=last)
            assert len(word) == length(w)
            assert apply_word(word, n) == w


def test_staircase():
    assert staircase(3) == parse("x1^2*x2", X(3))


def test_divided_difference():
    assert divided_difference(1, parse("x1^2", X(3))) == parse("x1 + x2", X(3))
    assert divided_difference(2, parse("x1", X(3))) == X(3).ring.zero
    with pytest.raises(AlphabetMismatch):
        divided_difference(1, parse("h1", H(3)))
    with pytest.raises(ShapeError):
        divided_difference(3, parse("x1", X(3)))


@st.composite
def x4_polynomial_strategy(draw):
    monoms = st.tuples(*[st.integers(min_value=0, max_value=3)] * 4)
    terms = draw(st.dictionaries(monoms, st.integers(min_value=-4, max_value=4), max_size=4))
    return from_terms(X(4), terms)


def dd(word, p):
    for i in reversed(word):
        p = divided_difference(i, p)
    return p


@settings(max_examples=100, deadline=None)
@given(p=x4_polynomial_strategy())
def test_divided_differences_satisfy_nil_coxeter_relations(p):
    zero = X(4).ring.zero
    for i in (1, 2, 3):
        assert dd([i, i], p) == zero
    assert dd([1, 2, 1], p) == dd([2, 1, 2], p)
    assert dd([2, 3, 2], p) == dd([3, 2, 3], p)
    assert dd([1, 3], p) == dd([3, 1], p)


@pytest.mark.parametrize("w, text", sorted(CLASSICAL_RANK_THREE.items()))
def test_classical_schubert_rank_three(w, text):
    assert schubert_poly(w) == parse(text, X(3))


@pytest.mark.parametrize("w, text", sorted(QUANTUM_RANK_THREE.items()))
def test_quantum_schubert_rank_three(w, text):
    assert quantum_schubert(w) == parse(text, XQ(3))


def test_render_of_longest_quantum_schubert():
    assert render(quantum_schubert((3, 2, 1))) == "x1^2*x2 + q1*x1"


def test_schubert_is_independent_of_the_reduced_word():
    n = 4
    for w in permutations(n):
        u = compose(inverse(w), longest(n))
        first = schubert_poly(w, reduced_word(u))
        last = schubert_poly(w, reduced_word(u, last=True))
        assert first == last == schubert_poly(w)


def test_schubert_rejects_a_bad_word():
    with pytest.raises(ShapeError):
        schubert_poly((1, 2, 3), [1])


@pytest.mark.parametrize("n", [3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_q_to_zero_recovers_classical(n):
    for w in permutations(n):
        assert specialize_q_to_zero(quantum_schubert(w)) == schubert_poly(w)


def test_quantum_elementary():
    assert quantum_e(2, 2, 3) == parse("x1*x2 + q1", XQ(3))
    assert quantum_e(1, 3, 3) == parse("x1 + x2 + x3", XQ(3))
    assert quantum_e(3, 2, 3) == XQ(3).ring.zero
    assert quantum_e(0, 0, 3) == XQ(3).ring.one


def test_elementary_expansion():
    expansion = elementary_expansion(parse("x1^2", X(3)))
    assert expansion == {(1, 1): 1, (0, 2): -1}
    assert quantize(expansion, 3) == parse("x1^2 - q1", XQ(3))


def test_elementary_expansion_outside_the_span():
    with pytest.raises(NotInSpan):
        elementary_expansion(parse("x3", X(3)))


@pytest.mark.parametrize("n", [3, 4])
def test_elementary_expansion_rebuilds_schubert(n):
    for w in permutations(n):
        rebuilt = X(n).ring.zero
        for t, c in elementary_expansion(schubert_poly(w)).items():
            rebuilt += e_monomial(t, n) * c
        assert rebuilt == schubert_poly(w)


def test_quantum_schur_rank_three():
    assert quantum_schur((1, 1), 2, 3) == quantum_schubert((2, 3, 1))
    assert quantum_schur((2,), 1, 3) == parse("x1^2 - q1", XQ(3))
    assert quantum_schur((), 1, 3) == XQ(3).ring.one
    with pytest.raises(ShapeError):
        quantum_schur((3,), 1, 3)


def test_grassmannian_perm_and_dual():
    assert grassmannian_perm((1, 1), 2, 3) == (2, 3, 1)
    assert grassmannian_perm((2,), 1, 3) == (3, 1, 2)
    assert dual_partition((1,), 1, 3) == (1,)
    assert dual_partition((), 2, 4) == (2, 2)


@pytest.mark.parametrize("n", [3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_quantum_schur_is_a_quantum_schubert(n):
    for m in range(1, n):
        for total in range(m * (n - m) + 1):
            for la in partitions_of(total, max_part=n - m, max_len=m):
                assert quantum_schur(la, m, n) == quantum_schubert(grassmannian_perm(la, m, n))


def test_structured_phi_matches_direct_phi():
    for w in permutations(4):
        assert loc_eq(phi_of_quantum_schubert(w), phi(quantum_schubert(w)))


def test_elementary_substitution_worked_example():
    expected = LocElem(parse("h1", H(3)), (1, 1), 3)
    assert loc_eq(elementary_substitution_image((3, 2, 1)), expected)


@pytest.mark.parametrize("n", [3, 4])
def test_fundamental_quantum_classes(n):
    for i in range(1, n):
        assert loc_eq(phi_of_quantum_schubert(w0_omega(i, n)), rect_inverse(i, n))

"""
Schubert and quantum Schubert polynomials.

Classical Schubert polynomials come from divided differences applied to the
staircase monomial. Quantization expands in the standard elementary
monomials e_{i_1}(1) ... e_{i_{n-1}}(n-1) and replaces each e_i(m) by the
quantum elementary polynomial E^q_i(m).
"""
from functools import lru_cache
from itertools import permutations as _permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from algebra.errors import AlphabetMismatch, InexactDivision, InternalInvariantError, NotInSpan, ShapeError
from algebra.locring import LocElem, loc_mul, loc_one, loc_sum, loc_zero, over_rect, phi
from algebra.polyring import (
    X,
    XQ,
    AlphabetKind,
    Polynomial,
    alphabet_of,
    exact_divide,
    truncate_to,
)
from algebra.symfunc import Partition, as_partition, conjugate, rect_partition, skew_schur_to_h
from utils.log import log_debug

Perm = Tuple[int, ...]
ETuple = Tuple[int, ...]


# Permutations

def as_perm(values: Iterable[int]) -> Perm:
    w = tuple(int(v) for v in values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ShapeError(f"{list(w)} is not a permutation of 1..{len(w)}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Sequence[int]) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def times_simple(w: Sequence[int], i: int) -> Perm:
    """w s_i: swap positions i and i+1."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def descent_set(w: Sequence[int]) -> Set[int]:
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def length(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def reduced_word(w: Sequence[int], last: bool = False) -> List[int]:
    """
    A reduced word a_1 ... a_l with w = s_{a_1} ... s_{a_l}.

    Peels right descents, the first one by default or the last one with ``last``.
    """
    cur = tuple(w)
    word = []
    while True:
        des = sorted(descent_set(cur))
        if not des:
            break
        i = des[-1] if last else des[0]
        word.append(i)
        cur = times_simple(cur, i)
    return word[::-1]


def apply_word(word: Sequence[int], n: int) -> Perm:
    w = identity(n)
    for i in word:
        w = times_simple(w, i)
    return w


def prime(w: Sequence[int]) -> Perm:
    """Cyclically shift every value down by one: w(i) -> w(i) - 1, with 1 -> n."""
    n = len(w)
    return tuple((v - 2) % n + 1 for v in w)


def permutations(n: int) -> List[Perm]:
    return [tuple(p) for p in _permutations(range(1, n + 1))]


# Divided differences and Schubert polynomials

def staircase(n: int) -> Polynomial:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}."""
    ring = X(n).ring
    return ring.from_dict({tuple(n - 1 - k for k in range(n)): 1})


def divided_difference(i: int, p: Polynomial) -> Polynomial:
    alphabet = alphabet_of(p)
    if alphabet.kind not in (AlphabetKind.X, AlphabetKind.XQ):
        raise AlphabetMismatch(alphabet, X(alphabet.n))
    if not 1 <= i <= alphabet.n - 1:
        raise ShapeError(f"divided difference index {i} outside [1, {alphabet.n - 1}]")
    a = alphabet.index(f"x{i}")
    b = alphabet.index(f"x{i + 1}")
    swapped = {}
    for monom, coeff in p.iterterms():
        m = list(monom)
        m[a], m[b] = m[b], m[a]
        swapped[tuple(m)] = coeff
    numerator = p - p.ring.from_dict(swapped)
    if not numerator:
        return p.ring.zero
    try:
        return exact_divide(numerator, alphabet.gen(f"x{i}") - alphabet.gen(f"x{i + 1}"))
    except InexactDivision as e:
        raise InternalInvariantError(f"divided difference ∂_{i} left a remainder: {e}")


@lru_cache(maxsize=None)
def _schubert_poly(w: Perm, word: Optional[Tuple[int, ...]]) -> Polynomial:
    n = len(w)
    if word is None:
        word = tuple(reduced_word(compose(inverse(w), longest(n))))
    p = staircase(n)
    for i in reversed(word):
        p = divided_difference(i, p)
    return p


def schubert_poly(w: Sequence[int], word: Optional[Sequence[int]] = None) -> Polynomial:
    """
    𝔖_w = ∂_{w^{-1} w_0} applied to the staircase.

    :param word: optional reduced word of w^{-1} w_0 to differentiate along.
    """
    w = as_perm(w)
    if len(w) < 2:
        raise ShapeError("rank must be at least 2")
    if word is not None:
        word = tuple(word)
        if apply_word(word, len(w)) != compose(inverse(w), longest(len(w))) or len(word) != length(
            compose(inverse(w), longest(len(w)))
        ):
            raise ShapeError(f"{list(word)} is not a reduced word of w^-1 w_0")
    return _schubert_poly(w, word)


# Elementary monomials

def etuples(n: int) -> Iterator[ETuple]:
    return product(*(range(k + 1) for k in range(1, n)))


@lru_cache(maxsize=None)
def quantum_e(i: int, m: int, n: int) -> Polynomial:
    """E^q_i(m) by the three-term recursion in m."""
    if not 0 <= m <= n:
        raise ShapeError(f"quantum elementary index m={m} outside [0, {n}]")
    ring = XQ(n).ring
    if i < 0 or i > m:
        return ring.zero
    if i == 0:
        return ring.one
    out = quantum_e(i, m - 1, n) + XQ(n).gen(f"x{m}") * quantum_e(i - 1, m - 1, n)
    if m >= 2:
        out += XQ(n).gen(f"q{m - 1}") * quantum_e(i - 2, m - 2, n)
    return out


@lru_cache(maxsize=None)
def elementary_e(i: int, m: int, n: int) -> Polynomial:
    """e_i(x_1, ..., x_m) over X(n)."""
    if not 0 <= m <= n:
        raise ShapeError(f"elementary index m={m} outside [0, {n}]")
    ring = X(n).ring
    if i < 0 or i > m:
        return ring.zero
    if i == 0:
        return ring.one
    return elementary_e(i, m - 1, n) + X(n).gen(f"x{m}") * elementary_e(i - 1, m - 1, n)


def e_monomial(t: Sequence[int], n: int) -> Polynomial:
    out = X(n).ring.one
    for k, i in enumerate(t, start=1):
        out = out * elementary_e(i, k, n)
    return out


def _homogeneous_parts(p: Polynomial) -> Dict[int, Polynomial]:
    parts: Dict[int, Dict] = {}
    for monom, coeff in p.iterterms():
        parts.setdefault(sum(monom), {})[monom] = coeff
    return {d: p.ring.from_dict(terms) for d, terms in parts.items()}


def elementary_expansion(p: Polynomial) -> Dict[ETuple, int]:
    """
    Integer coefficients c_T with p = Σ c_T e_{i_1}(1) ... e_{i_{n-1}}(n-1).

    Each homogeneous degree is solved separately by exact elimination over Q.
    """
    alphabet = alphabet_of(p)
    if alphabet.kind != AlphabetKind.X:
        raise AlphabetMismatch(alphabet, X(alphabet.n))
    n = alphabet.n
    out: Dict[ETuple, int] = {}
    for degree, part in sorted(_homogeneous_parts(p).items()):
        candidates = [t for t in etuples(n) if sum(t) == degree]
        polys = [e_monomial(t, n) for t in candidates]
        support = sorted(set(part.itermonoms()).union(*(set(q.itermonoms()) for q in polys)))
        if not candidates:
            raise NotInSpan("not in standard elementary span")
        rows = [[QQ(int(q.get(m, 0))) for q in polys] + [QQ(int(part.get(m, 0)))] for m in support]
        matrix = DomainMatrix(rows, (len(rows), len(candidates) + 1), QQ)
        rref, pivots = matrix.rref()
        if len(candidates) in pivots:
            raise NotInSpan("not in standard elementary span")
        entries = rref.to_list()
        for r, c in enumerate(pivots):
            value = entries[r][-1]
            if value.denominator != 1:
                raise InternalInvariantError(f"non-integral coefficient {value} for e_{candidates[c]}")
            if value:
                out[candidates[c]] = int(value.numerator)
    log_debug("elementary expansion in rank %d has %d terms", n, len(out))
    return out


# Quantization

def quantize(expansion: Dict[ETuple, int], n: int) -> Polynomial:
    out = XQ(n).ring.zero
    for t, c in expansion.items():
        term = XQ(n).ring.one
        for k, i in enumerate(t, start=1):
            term = term * quantum_e(i, k, n)
        out += term * c
    return out


@lru_cache(maxsize=None)
def _expansion(w: Perm) -> Tuple[Tuple[ETuple, int], ...]:
    return tuple(sorted(elementary_expansion(schubert_poly(w)).items()))


@lru_cache(maxsize=None)
def _quantum_schubert(w: Perm) -> Polynomial:
    return quantize(dict(_expansion(w)), len(w))


def quantum_schubert(w: Sequence[int]) -> Polynomial:
    return _quantum_schubert(as_perm(w))


@lru_cache(maxsize=None)
def _phi_quantum_e(i: int, m: int, n: int) -> LocElem:
    return phi(quantum_e(i, m, n))


def _expansion_image(w: Perm, factor) -> LocElem:
    n = len(w)
    terms = []
    for t, c in _expansion(w):
        term = loc_one(n)
        for k, i in enumerate(t, start=1):
            if i:
                term = loc_mul(term, factor(i, k, n))
        terms.append(term * c)
    if not terms:
        return loc_zero(n)
    return loc_sum(terms)


def phi_of_quantum_schubert(w: Sequence[int]) -> LocElem:
    """Φ(𝔖^q_w) computed factor by factor over the elementary expansion."""
    return _expansion_image(as_perm(w), _phi_quantum_e)


@lru_cache(maxsize=None)
def _elementary_image(i: int, m: int, n: int) -> LocElem:
    return over_rect(skew_schur_to_h(rect_partition(m, n), (i,), n), m)


def elementary_substitution_image(w: Sequence[int]) -> LocElem:
    """Substitute e_i(m) -> (h_i^⊥ s_{R_m}) / s_{R_m} in the elementary expansion of 𝔖_w."""
    return _expansion_image(as_perm(w), _elementary_image)


# Quantum Schur functions

def _check_shape(la: Partition, m: int, n: int) -> None:
    if not 1 <= m <= n - 1:
        raise ShapeError(f"m={m} outside [1, {n - 1}]")
    if len(la) > m or (la and la[0] > n - m):
        raise ShapeError(f"{list(la)} does not fit in the {m} x {n - m} box")


def quantum_schur(la: Sequence[int], m: int, n: int) -> Polynomial:
    """
    det(E^q_{λ'_i - i + j}(m + j - 1)), a λ_1 x λ_1 determinant.

    Column j uses m + j - 1 variables, so every term is a product of E's with
    distinct flags and the determinant is the quantization of s_λ(x_1..x_m).
    """
    la = as_partition(la)
    _check_shape(la, m, n)
    conj = conjugate(la)
    k = len(conj)
    ring = XQ(n).ring
    if k == 0:
        return ring.one
    entries = [[quantum_e(conj[i] - i + j, m + j, n) for j in range(k)] for i in range(k)]
    if k == 1:
        return entries[0][0]
    return DomainMatrix(entries, (k, k), ring.to_domain()).det()


def grassmannian_perm(la: Sequence[int], m: int, n: int) -> Perm:
    """w_{λ,m}: 1 + λ_m, ..., m + λ_1, then the remaining values increasing."""
    la = as_partition(la)
    _check_shape(la, m, n)
    padded = list(la) + [0] * (m - len(la))
    head = [k + padded[m - k] for k in range(1, m + 1)]
    tail = [v for v in range(1, n + 1) if v not in head]
    return tuple(head + tail)


def dual_partition(la: Sequence[int], m: int, n: int) -> Partition:
    """λ∨: transpose of the complement of λ in the m x (n - m) box."""
    la = as_partition(la)
    _check_shape(la, m, n)
    padded = list(la) + [0] * (m - len(la))
    complement = [(n - m) - padded[m - 1 - i] for i in range(m)]
    return conjugate(as_partition(complement))


def w0_omega(i: int, n: int) -> Perm:
    """[n-i+1, ..., n, 1, ..., n-i]."""
    if not 0 <= i <= n - 1:
        raise ShapeError(f"index {i} outside [0, {n - 1}]")
    return tuple(list(range(n - i + 1, n + 1)) + list(range(1, n - i + 1)))


def specialize_q_to_zero(p: Polynomial) -> Polynomial:
    return truncate_to(p, X(alphabet_of(p).n))


"""
k-Schur functions at t = 1 from the weak Pieri rule on (k+1)-cores.

h_μ = Σ_ν K_{νμ} s^{(k)}_ν where K counts chains of weak horizontal strips.
The k-Kostka matrix is unitriangular, so each s^{(k)}_λ is recovered by
back-substitution. Nothing here touches the substitution Φ.
"""
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from algebra.errors import InternalInvariantError, ShapeError
from algebra.polyring import H, Polynomial
from algebra.symfunc import Partition, as_partition, conjugate, partitions_of, rect_partition, schur_to_h, size
from utils.log import log_debug

KostkaRow = Dict[Partition, int]

_cache_client = None
_tables: Dict[Tuple[int, int], Dict[Partition, Polynomial]] = {}


def set_cache_client(client) -> None:
    """Attach an advisory on-disk cache (see store.cache_client), or None to detach."""
    global _cache_client
    _cache_client = client
    _tables.clear()


# Cores

def hook(shape: Sequence[int], i: int, j: int) -> int:
    """Hook length of cell (i, j), both 1-based."""
    conj = conjugate(shape)
    return (shape[i - 1] - j) + (conj[j - 1] - i) + 1


def is_core(shape: Sequence[int], k: int) -> bool:
    shape = as_partition(shape)
    return all(hook(shape, i, j) != k + 1 for i in range(1, len(shape) + 1) for j in range(1, shape[i - 1] + 1))


def bounded_from_core(core: Sequence[int], k: int) -> Partition:
    """Row by row, the number of cells with hook length at most k."""
    core = as_partition(core)
    if not is_core(core, k):
        raise ShapeError(f"{list(core)} is not a {k + 1}-core")
    return as_partition(
        sum(1 for j in range(1, core[i - 1] + 1) if hook(core, i, j) <= k) for i in range(1, len(core) + 1)
    )


@lru_cache(maxsize=None)
def _core_from_bounded(la: Partition, k: int) -> Partition:
    rows: List[int] = []
    for part in reversed(la):
        skip = 0
        # the leftmost kept cell has arm part-1 and leg = rows below reaching past column skip
        while part + sum(1 for r in rows if r >= skip + 1) > k:
            skip += 1
        rows.append(part + skip)
    core = tuple(reversed(rows))
    if bounded_from_core(core, k) != la:
        raise InternalInvariantError(f"core {list(core)} does not map back to {list(la)}")
    return core


def core_from_bounded(la: Sequence[int], k: int) -> Partition:
    la = as_partition(la)
    if la and la[0] > k:
        raise ShapeError(f"{list(la)} is not {k}-bounded")
    return _core_from_bounded(la, k)


# Weak Pieri rule

def _horizontal_strips(la: Partition, r: int, k: int) -> List[Partition]:
    rows = list(la) + [0]
    out = []

    def extend(i: int, remaining: int, acc: List[int]):
        if i == len(rows):
            if remaining == 0:
                out.append(as_partition(acc))
            return
        cap = k if i == 0 else rows[i - 1]
        for add in range(min(remaining, cap - rows[i]), -1, -1):
            extend(i + 1, remaining - add, acc + [rows[i] + add])

    extend(0, r, [])
    return out


def _skew_cells(outer: Partition, inner: Partition) -> List[Tuple[int, int]]:
    padded = list(inner) + [0] * (len(outer) - len(inner))
    return [(i, j) for i in range(1, len(outer) + 1) for j in range(padded[i - 1] + 1, outer[i - 1] + 1)]


def is_weak_strip(la: Partition, mu: Partition, k: int) -> bool:
    """core(μ)/core(λ) is a horizontal strip whose cells carry exactly |μ| - |λ| residues."""
    small, big = core_from_bounded(la, k), core_from_bounded(mu, k)
    if len(small) > len(big) or any(a > b for a, b in zip(small, big)):
        return False
    padded = list(small) + [0] * (len(big) - len(small))
    if any(big[i + 1] > padded[i] for i in range(len(big) - 1)):
        return False
    residues = {(j - i) % (k + 1) for i, j in _skew_cells(big, small)}
    return len(residues) == size(mu) - size(la)


@lru_cache(maxsize=None)
def weak_pieri_targets(la: Partition, r: int, k: int) -> FrozenSet[Partition]:
    la = as_partition(la)
    if la and la[0] > k:
        raise ShapeError(f"{list(la)} is not {k}-bounded")
    if not 1 <= r <= k:
        raise ShapeError(f"Pieri degree {r} outside [1, {k}]")
    return frozenset(mu for mu in _horizontal_strips(la, r, k) if is_weak_strip(la, mu, k))


# k-Kostka matrix and its inverse

@lru_cache(maxsize=None)
def h_in_kschur(mu: Partition, k: int) -> Tuple[Tuple[Partition, int], ...]:
    """h_μ = Σ K_{νμ} s^{(k)}_ν by iterated weak Pieri."""
    if not mu:
        return (((), 1),)
    current: KostkaRow = {}
    for nu, c in h_in_kschur(mu[:-1], k):
        for target in weak_pieri_targets(nu, mu[-1], k):
            current[target] = current.get(target, 0) + c
    return tuple(sorted((nu, c) for nu, c in current.items() if c))


def kostka_matrix(degree: int, k: int) -> Dict[Partition, KostkaRow]:
    """Columns μ -> {ν: K_{νμ}}, asserting unitriangularity in lex order."""
    matrix = {}
    for mu in partitions_of(degree, max_part=k):
        column = dict(h_in_kschur(mu, k))
        if column.get(mu) != 1 or any(nu < mu for nu in column):
            raise InternalInvariantError(f"k-Kostka column {list(mu)} is not unitriangular for k={k}")
        matrix[mu] = column
    return matrix


def h_monomial(mu: Sequence[int], n: int) -> Polynomial:
    exps = [0] * (n - 1)
    for part in mu:
        exps[part - 1] += 1
    return H(n).ring.from_dict({tuple(exps): 1})


@lru_cache(maxsize=None)
def _compute_table(n: int, degree: int) -> Dict[Partition, Polynomial]:
    k = n - 1
    matrix = kostka_matrix(degree, k)
    table: Dict[Partition, Polynomial] = {}
    # lex-descending: every ν above μ is already solved
    for mu in partitions_of(degree, max_part=k):
        value = h_monomial(mu, n)
        for nu, c in matrix[mu].items():
            if nu != mu:
                value = value - table[nu] * c
        table[mu] = value
    log_debug("k-Schur table n=%d degree=%d has %d entries", n, degree, len(table))
    return table


def kschur_table(n: int, degree: int) -> Dict[Partition, Polynomial]:
    key = (n, degree)
    if key in _tables:
        return _tables[key]
    table = _cache_client.load(n, degree) if _cache_client is not None else None
    if table is None:
        table = _compute_table(n, degree)
        if _cache_client is not None:
            _cache_client.save(n, degree, table)
    _tables[key] = table
    return table


def kschur_in_h(la: Sequence[int], n: int) -> Polynomial:
    """s^{(n-1)}_λ as a polynomial in h_1, ..., h_{n-1}."""
    la = as_partition(la)
    if la and la[0] > n - 1:
        raise ShapeError(f"{list(la)} is not {n - 1}-bounded")
    return kschur_table(n, size(la))[la]


def rectangle_factorization_check(la: Sequence[int], i: int, n: int) -> bool:
    """s^{(k)}_{λ ∪ R_i} = s^{(k)}_λ s_{R_i}."""
    la = as_partition(la)
    rect = rect_partition(i, n)
    union = tuple(sorted(la + rect, reverse=True))
    return kschur_in_h(union, n) == kschur_in_h(la, n) * schur_to_h(rect, n)

"""
Symmetric functions in the truncated ring Z[h_1, ..., h_{n-1}].

h_m is identified with 0 for m >= n, so Jacobi-Trudi determinants land in
the quotient and s_lambda may vanish. Schur expansions are plain dicts
{partition: coefficient} with no zero entries.
"""
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from algebra.errors import InternalInvariantError, NotHomogeneous, ShapeError
from algebra.polyring import H, Polynomial, alphabet_of, weighted_degree

Partition = Tuple[int, ...]
SchurExpansion = Dict[Partition, int]


# Partitions

def as_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ShapeError(f"{list(parts)} is not a partition")
    return parts


def size(la: Sequence[int]) -> int:
    return sum(la)


def conjugate(la: Sequence[int]) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > j) for j in range(la[0]))


def contains(la: Sequence[int], mu: Sequence[int]) -> bool:
    """True when the diagram of mu sits inside the diagram of la."""
    if len(mu) > len(la):
        return False
    return all(m <= l for m, l in zip(mu, la))


def is_horizontal_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if not contains(outer, inner):
        return False
    padded = list(inner) + [0] * (len(outer) - len(inner))
    # outer_{i+1} <= inner_i
    return all(outer[i + 1] <= padded[i] for i in range(len(outer) - 1))


def partitions_of(total: int, max_part: Optional[int] = None, max_len: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``total`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions_of(total - first, first, rest_len):
            yield (first,) + rest


def partition_of_monomial(monom: Sequence[int]) -> Partition:
    # exponent a_i of h_i contributes a_i parts equal to i
    parts = []
    for i in range(len(monom), 0, -1):
        parts.extend([i] * monom[i - 1])
    return tuple(parts)


# Jacobi-Trudi

def h(m: int, n: int) -> Polynomial:
    ring = H(n).ring
    if m == 0:
        return ring.one
    if m < 0 or m >= n:
        return ring.zero
    return ring.gens[m - 1]


def _det(entries, n: int) -> Polynomial:
    k = len(entries)
    ring = H(n).ring
    if k == 0:
        return ring.one
    if k == 1:
        return entries[0][0]
    return DomainMatrix(entries, (k, k), ring.to_domain()).det()


@lru_cache(maxsize=None)
def _schur_to_h(la: Partition, n: int) -> Polynomial:
    k = len(la)
    return _det([[h(la[i] - i + j, n) for j in range(k)] for i in range(k)], n)


def schur_to_h(la: Sequence[int], n: int) -> Polynomial:
    """s_lambda = det(h_{lambda_i - i + j}) with h_m = 0 for m >= n."""
    return _schur_to_h(as_partition(la), n)


@lru_cache(maxsize=None)
def _skew_schur_to_h(la: Partition, mu: Partition, n: int) -> Polynomial:
    if not contains(la, mu):
        return H(n).ring.zero
    k = len(la)
    mu = mu + (0,) * (k - len(mu))
    return _det([[h(la[i] - mu[j] - i + j, n) for j in range(k)] for i in range(k)], n)


def skew_schur_to_h(la: Sequence[int], mu: Sequence[int], n: int) -> Polynomial:
    return _skew_schur_to_h(as_partition(la), as_partition(mu), n)


def elementary(k: int, n: int) -> Polynomial:
    if k < 0:
        return H(n).ring.zero
    return schur_to_h((1,) * k, n)


def dual_jacobi_trudi(la: Sequence[int], n: int) -> Polynomial:
    """s_lambda = det(e_{lambda'_i - i + j}), each e_k read through the h-picture."""
    conj = conjugate(as_partition(la))
    k = len(conj)
    return _det([[elementary(conj[i] - i + j, n) for j in range(k)] for i in range(k)], n)


# Change of basis

def homogeneous_degree(f: Polynomial) -> int:
    """Degree of f under deg h_i = i; raises NotHomogeneous on mixed degrees."""
    n = alphabet_of(f).n
    weights = range(1, n)
    degrees = {weighted_degree(m, weights) for m in f.itermonoms()}
    if len(degrees) > 1:
        raise NotHomogeneous(f"mixed degrees {sorted(degrees)} in an element of Λ_({n})")
    return degrees.pop() if degrees else 0


def schur_expand(f: Polynomial, degree: Optional[int] = None) -> SchurExpansion:
    """
    Write a homogeneous f in Λ_(n) as an integer combination of Schur functions.

    s_mu is h_mu plus h-monomials indexed by partitions dominating mu, so
    the lex-smallest surviving h-monomial always carries a Schur coefficient.
    """
    n = alphabet_of(f).n
    if not f:
        return {}
    actual = homogeneous_degree(f)
    if degree is not None and actual != degree:
        raise NotHomogeneous(f"expected degree {degree}, found {actual}")

    out: SchurExpansion = {}
    rest = f
    while rest:
        monom, coeff = min(rest.iterterms(), key=lambda t: partition_of_monomial(t[0]))
        mu = partition_of_monomial(monom)
        s_mu = _schur_to_h(mu, n)
        if s_mu.get(monom, 0) != 1:
            raise InternalInvariantError(f"s_{list(mu)} is not unitriangular in the h basis")
        out[mu] = int(coeff)
        rest = rest - s_mu * int(coeff)
    return out


def schur_sum(expansion: SchurExpansion, n: int) -> Polynomial:
    ring = H(n).ring
    total = ring.zero
    for la, c in expansion.items():
        total += schur_to_h(la, n) * c
    return total


def _accumulate(into: SchurExpansion, other: SchurExpansion, scale: int) -> None:
    for la, c in other.items():
        value = into.get(la, 0) + scale * c
        if value:
            into[la] = value
        else:
            into.pop(la, None)


def perp(mu: Sequence[int], f: SchurExpansion, n: int) -> SchurExpansion:
    """s_mu^perp applied to a Schur expansion."""
    mu = as_partition(mu)
    out: SchurExpansion = {}
    for la, c in f.items():
        skew = skew_schur_to_h(la, mu, n)
        if skew:
            _accumulate(out, schur_expand(skew, size(la) - size(mu)), c)
    return out


# Rectangles

def _check_rect_index(i: int, n: int) -> None:
    if not 0 <= i <= n:
        raise ShapeError(f"rectangle index {i} outside [0, {n}]")


def rect_partition(i: int, n: int) -> Partition:
    """R_i = i^(n-i): i columns and n-i rows."""
    _check_rect_index(i, n)
    if i in (0, n):
        return ()
    return (i,) * (n - i)


def rect_clipped_partition(i: int, n: int) -> Partition:
    """R'_i: R_i with its outer corner removed."""
    _check_rect_index(i, n)
    if i in (0, n):
        return ()
    return as_partition((i,) * (n - i - 1) + (i - 1,))


def rect_schur(i: int, n: int) -> Polynomial:
    _check_rect_index(i, n)
    if i in (0, n):
        return H(n).ring.one
    return schur_to_h(rect_partition(i, n), n)


def rect_clipped_schur(i: int, n: int) -> Polynomial:
    _check_rect_index(i, n)
    if i in (0, n):
        return H(n).ring.zero
    return schur_to_h(rect_clipped_partition(i, n), n)


# Text and JSON

def partition_key(la: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in la) + "]"


def expansion_to_json(expansion: SchurExpansion) -> Dict[str, int]:
    return {partition_key(la): c for la, c in sorted(expansion.items(), reverse=True)}


def render_expansion(expansion: SchurExpansion) -> str:
    if not expansion:
        return "0"
    out = []
    for la, c in sorted(expansion.items(), reverse=True):
        body = f"s{partition_key(la)}"
        text = body if abs(c) == 1 else f"{abs(c)}*{body}"
        if not out:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(out)

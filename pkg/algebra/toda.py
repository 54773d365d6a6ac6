"""
Lax matrix, Toda Hamiltonians and the Kostant map.

Polynomial matrices go through sympy's DomainMatrix over the XQ(n) ring.
Matrices with entries in the localization are plain lists of LocElem rows,
multiplied with a single common-denominator sum per entry.
"""
from typing import List, NamedTuple

from pydantic import BaseModel
from sympy.polys.matrices import DomainMatrix

from algebra.errors import InternalInvariantError
from algebra.locring import LocElem, loc_eq, loc_from_poly, loc_mul, loc_one, loc_sum, loc_zero, over_rect, phi
from algebra.polyring import XQ, Polynomial, render
from algebra.symfunc import h, rect_partition, skew_schur_to_h

LocMatrix = List[List[LocElem]]


class Hamiltonian(NamedTuple):
    """H_k = trace / divisor with trace = tr(L^{k+1}) and divisor = k + 1."""

    k: int
    trace: Polynomial
    divisor: int


# Polynomial side

def lax_matrix(n: int) -> DomainMatrix:
    """Diagonal x_i, superdiagonal -1, subdiagonal q_i."""
    alphabet = XQ(n)
    ring = alphabet.ring
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = alphabet.gen(f"x{i + 1}")
        if i + 1 < n:
            rows[i][i + 1] = -ring.one
            rows[i + 1][i] = alphabet.gen(f"q{i + 1}")
    return DomainMatrix(rows, (n, n), ring.to_domain())


def lax_lower(n: int) -> DomainMatrix:
    """L_-, the strictly lower part of L."""
    alphabet = XQ(n)
    ring = alphabet.ring
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i + 1][i] = alphabet.gen(f"q{i + 1}")
    return DomainMatrix(rows, (n, n), ring.to_domain())


def _power(m: DomainMatrix, e: int) -> DomainMatrix:
    n = m.shape[0]
    out = DomainMatrix.eye(n, m.domain).to_dense()
    for _ in range(e):
        out = out.matmul(m)
    return out


def _trace(m: DomainMatrix) -> Polynomial:
    rows = m.to_list()
    out = rows[0][0]
    for i in range(1, len(rows)):
        out = out + rows[i][i]
    return out


def hamiltonians(n: int) -> List[Hamiltonian]:
    lax = lax_matrix(n)
    return [Hamiltonian(k, _trace(_power(lax, k + 1)), k + 1) for k in range(1, n + 1)]


def conservation_check(n: int) -> bool:
    """tr(L^{k-1} [L, L_-]) = 0 for 1 <= k <= n + 1."""
    lax, lower = lax_matrix(n), lax_lower(n)
    bracket = lax.matmul(lower) - lower.matmul(lax)
    return all(not _trace(_power(lax, k - 1).matmul(bracket)) for k in range(1, n + 2))


# Localized matrices

def mat_identity(n: int) -> LocMatrix:
    return [[loc_one(n) if i == j else loc_zero(n) for j in range(n)] for i in range(n)]


def mat_mul(a: LocMatrix, b: LocMatrix) -> LocMatrix:
    n = len(a)
    rank = a[0][0].n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = [loc_mul(a[i][t], b[t][j]) for t in range(n) if not a[i][t].is_zero() and not b[t][j].is_zero()]
            row.append(loc_sum(terms) if terms else loc_zero(rank))
        out.append(row)
    return out


def mat_pow(a: LocMatrix, e: int) -> LocMatrix:
    out = mat_identity(len(a))
    for _ in range(e):
        out = mat_mul(out, a)
    return out


def mat_eq(a: LocMatrix, b: LocMatrix) -> bool:
    return all(loc_eq(x, y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a: LocMatrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def toeplitz_g(n: int) -> LocMatrix:
    """Unipotent upper triangular with (i, j) entry h_{j-i}."""
    zero = loc_zero(n)
    return [[loc_from_poly(h(j - i, n)) if j >= i else zero for j in range(n)] for i in range(n)]


def principal_nilpotent(n: int) -> LocMatrix:
    """e: -1 on the superdiagonal."""
    out = [[loc_zero(n)] * n for _ in range(n)]
    for i in range(n - 1):
        out[i][i + 1] = loc_one(n) * -1
    return out


def n_minus_closed_form(n: int) -> LocMatrix:
    """(i, j) = (-1)^{i-j} (e_{i-j}^⊥ s_{R_j}) / s_{R_j} below the diagonal."""
    out = mat_identity(n)
    for i in range(1, n + 1):
        for j in range(1, i):
            skew = skew_schur_to_h(rect_partition(j, n), (1,) * (i - j), n)
            out[i - 1][j - 1] = over_rect(skew, j) * (-1) ** (i - j)
    return out


def n_minus_inverse_closed_form(n: int) -> LocMatrix:
    """(i, j) = (h_{i-j}^⊥ s_{R_{i-1}}) / s_{R_{i-1}} below the diagonal."""
    out = mat_identity(n)
    for i in range(2, n + 1):
        for j in range(1, i):
            skew = skew_schur_to_h(rect_partition(i - 1, n), (i - j,), n)
            out[i - 1][j - 1] = over_rect(skew, i - 1)
    inverse_ok = mat_eq(mat_mul(n_minus_closed_form(n), out), mat_identity(n))
    if not inverse_ok:
        raise InternalInvariantError(f"closed-form n_- and its inverse do not multiply to the identity at n={n}")
    return out


def antitriangular_check(n: int) -> bool:
    """g n_- vanishes strictly above the anti-diagonal (i + j <= n, 1-based)."""
    product = mat_mul(toeplitz_g(n), n_minus_closed_form(n))
    return all(product[i - 1][j - 1].is_zero() for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n)


def psi(n: int) -> LocMatrix:
    """Ψ(g) = n_-^{-1} e n_-; must have the tridiagonal shape of L."""
    out = mat_mul(mat_mul(n_minus_inverse_closed_form(n), principal_nilpotent(n)), n_minus_closed_form(n))
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1 and not out[i][j].is_zero():
                raise InternalInvariantError(f"Ψ entry ({i + 1},{j + 1}) is nonzero off the three diagonals")
    return out


def phi_of_lax(n: int) -> LocMatrix:
    return [[phi(entry) for entry in row] for row in lax_matrix(n).to_list()]


# Reports

class EntryCheck(BaseModel):
    i: int
    j: int
    passed: bool
    psi: str
    phi: str


class KostantReport(BaseModel):
    n: int
    entries: List[EntryCheck]
    nilpotent: bool
    antitriangular: bool
    hamiltonians_vanish: List[bool]
    conservation: bool

    @property
    def passed(self) -> bool:
        return (
            all(e.passed for e in self.entries)
            and self.nilpotent
            and self.antitriangular
            and all(self.hamiltonians_vanish)
            and self.conservation
        )


def verify_kostant(n: int) -> KostantReport:
    """Ψ(g) against Φ applied entrywise to L, plus the nilpotent-leaf identities."""
    left, right = psi(n), phi_of_lax(n)
    entries = [
        EntryCheck(
            i=i + 1,
            j=j + 1,
            passed=loc_eq(left[i][j], right[i][j]),
            psi=str(left[i][j]),
            phi=str(right[i][j]),
        )
        for i in range(n)
        for j in range(n)
    ]
    return KostantReport(
        n=n,
        entries=entries,
        nilpotent=is_zero_matrix(mat_pow(left, n)),
        antitriangular=antitriangular_check(n),
        hamiltonians_vanish=[phi(ham.trace).is_zero() for ham in hamiltonians(n)],
        conservation=conservation_check(n),
    )


def render_hamiltonian(ham: Hamiltonian) -> str:
    return f"H_{ham.k} = ({render(ham.trace)}) / {ham.divisor}"

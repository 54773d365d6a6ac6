"""
Extended affine symmetric group in window notation.

An element is a bijection x: Z -> Z with x(j + n) = x(j) + n, determined by
its window [x(1), ..., x(n)]. Windows that differ by adding n to every entry
are identified. The window is kept as given for display; equality and
hashing compare the representative with Σx(i) - Σi in [0, n²). Elements of
the non-extended group have Σx(i) = Σi.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel

from algebra.errors import InternalInvariantError, NotGrassmannian, RankMismatch, ShapeError
from algebra.schubert import as_perm, descent_set, prime, w0_omega
from algebra.symfunc import Partition, as_partition, conjugate, rect_partition, size

Coweight = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ExtAffinePerm:
    window: Tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        n = len(window)
        if n < 2:
            raise ShapeError("rank must be at least 2")
        if len({v % n for v in window}) != n:
            raise ShapeError(f"window {list(window)} does not have distinct residues mod {n}")
        object.__setattr__(self, "window", window)

    @property
    def normalized(self) -> Tuple[int, ...]:
        n = self.n
        shift = (sum(self.window) - n * (n + 1) // 2) // (n * n)
        return tuple(v - n * shift for v in self.window)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtAffinePerm):
            return NotImplemented
        return self.normalized == other.normalized

    def __hash__(self) -> int:
        return hash(self.normalized)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, j: int) -> int:
        r, s = (j - 1) % self.n + 1, (j - 1) // self.n
        return self.window[r - 1] + self.n * s

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.window) + "]"


def _check(a: ExtAffinePerm, b: ExtAffinePerm) -> None:
    if a.n != b.n:
        raise RankMismatch(a.n, b.n)


def affine_identity(n: int) -> ExtAffinePerm:
    return ExtAffinePerm(tuple(range(1, n + 1)))


def from_perm(w: Sequence[int]) -> ExtAffinePerm:
    return ExtAffinePerm(as_perm(w))


def compose(a: ExtAffinePerm, b: ExtAffinePerm) -> ExtAffinePerm:
    """(a ∘ b)(i) = a(b(i))."""
    _check(a, b)
    return ExtAffinePerm(tuple(a(b(i)) for i in range(1, a.n + 1)))


def inverse(x: ExtAffinePerm) -> ExtAffinePerm:
    n = x.n
    out = [0] * n
    for r in range(1, n + 1):
        v = x(r)
        v0, s = (v - 1) % n + 1, (v - 1) // n
        out[v0 - 1] = r - n * s
    return ExtAffinePerm(tuple(out))


# Coweights

def omega(i: int, n: int) -> Coweight:
    """ω_i^∨ = e_1 + ... + e_i."""
    return (1,) * i + (0,) * (n - i)


def alpha(i: int, n: int) -> Coweight:
    """α_i^∨ = e_i - e_{i+1}."""
    out = [0] * n
    out[i - 1], out[i] = 1, -1
    return tuple(out)


def coweight_add(*vectors: Sequence[int]) -> Coweight:
    return tuple(sum(parts) for parts in zip(*vectors))


def coweight_neg(v: Sequence[int]) -> Coweight:
    return tuple(-c for c in v)


def is_antidominant(v: Sequence[int]) -> bool:
    return all(v[i] - v[i + 1] <= 0 for i in range(len(v) - 1))


def in_coroot_lattice(v: Sequence[int]) -> bool:
    return sum(v) == 0


def translation(la: Sequence[int]) -> ExtAffinePerm:
    """t_λ = [1 + nλ_1, ..., n + nλ_n]."""
    n = len(la)
    return ExtAffinePerm(tuple(j + n * la[j - 1] for j in range(1, n + 1)))


# Length, descents, words

def length(x: ExtAffinePerm) -> int:
    n = x.n
    w = x.window
    return sum(abs((w[j] - w[i]) // n) for i in range(n) for j in range(i + 1, n))


def is_grassmannian(x: ExtAffinePerm) -> bool:
    return all(a < b for a, b in zip(x.window, x.window[1:]))


def times_simple(x: ExtAffinePerm, i: int) -> ExtAffinePerm:
    """x s_i; s_0 exchanges positions 0 and 1 across the period."""
    w = list(x.window)
    n = x.n
    if i == 0:
        w[0], w[-1] = w[-1] - n, w[0] + n
    elif 1 <= i <= n - 1:
        w[i - 1], w[i] = w[i], w[i - 1]
    else:
        raise ShapeError(f"generator s_{i} outside s_0..s_{n - 1}")
    return ExtAffinePerm(tuple(w))


def simple_times(i: int, x: ExtAffinePerm) -> ExtAffinePerm:
    """s_i x; acts on values, swapping the residues i and i + 1 mod n."""
    n = x.n
    if not 0 <= i <= n - 1:
        raise ShapeError(f"generator s_{i} outside s_0..s_{n - 1}")
    out = []
    for v in x.window:
        if v % n == i:
            v += 1
        elif v % n == (i + 1) % n:
            v -= 1
        out.append(v)
    return ExtAffinePerm(tuple(out))


def right_descents(x: ExtAffinePerm) -> List[int]:
    return [i for i in range(x.n) if x(i) > x(i + 1)]


def reduced_word(x: ExtAffinePerm) -> List[int]:
    """Word a_1 ... a_l with x = z s_{a_1} ... s_{a_l}, z of length zero."""
    word = []
    cur = x
    while True:
        des = right_descents(cur)
        if not des:
            break
        word.append(des[0])
        cur = times_simple(cur, des[0])
    return word[::-1]


def from_word(word: Sequence[int], n: int) -> ExtAffinePerm:
    x = affine_identity(n)
    for i in word:
        x = times_simple(x, i)
    return x


# Rotation and Grassmannian parts

def rotation_part(x: ExtAffinePerm) -> int:
    """r with x = τ_r grassmannian_part(x)."""
    n = x.n
    return -((sum(x.window) - n * (n + 1) // 2) // n) % n


def grassmannian_part(x: ExtAffinePerm) -> ExtAffinePerm:
    """y with x = z y, z a rotation and Σy(i) = Σi."""
    n = x.n
    c = (sum(x.window) - n * (n + 1) // 2) // n
    return ExtAffinePerm(tuple(v - c for v in x.window))


def special_rotation(i: int, n: int) -> ExtAffinePerm:
    """τ_i = w_0^{ω_i} t_{-ω_i^∨}: the shift j -> j - i."""
    if not 0 <= i <= n - 1:
        raise ShapeError(f"index {i} outside [0, {n - 1}]")
    return compose(from_perm(w0_omega(i, n)), translation(coweight_neg(omega(i, n))))


def d_element(i: int, n: int) -> ExtAffinePerm:
    """The affine Grassmannian element in the rotation coset of t_{-ω_i^∨}."""
    if not 1 <= i <= n - 1:
        raise ShapeError(f"index {i} outside [1, {n - 1}]")
    y = grassmannian_part(translation(coweight_neg(omega(i, n))))
    if not is_grassmannian(y):
        raise InternalInvariantError(f"d_{i} = {y} is not Grassmannian")
    return y


def d_word_from_tableau(i: int, n: int) -> List[int]:
    """Read the shape R_i filled with (c - r) mod n, top row first, each row right to left."""
    rect = rect_partition(i, n)
    word = []
    for r in range(len(rect), 0, -1):
        for c in range(rect[r - 1], 0, -1):
            word.append((c - r) % n)
    return word


# Bounded partitions

def bounded_partition_of(y: ExtAffinePerm) -> Partition:
    """
    The (n-1)-bounded partition of a Grassmannian y.

    Column r of the conjugate counts j < r with y(j) > y(r) over all integers j.
    """
    if not is_grassmannian(y):
        raise NotGrassmannian(y.window)
    n = y.n
    counts = []
    for r in range(1, n + 1):
        total = 0
        for j0 in range(1, n + 1):
            upper = (r - 1 - j0) // n
            lower = (y(r) - y(j0)) // n + 1
            total += max(0, upper - lower + 1)
        counts.append(total)
    if any(a < b for a, b in zip(counts, counts[1:])):
        raise InternalInvariantError(f"inversion counts {counts} of {y} are not a partition")
    return conjugate(as_partition(counts))


@lru_cache(maxsize=None)
def grassmannian_elements(n: int, max_length: int) -> Dict[int, Tuple[ExtAffinePerm, ...]]:
    """All Grassmannian elements of length at most max_length, by length."""
    levels: Dict[int, Tuple[ExtAffinePerm, ...]] = {0: (affine_identity(n),)}
    for ell in range(max_length):
        seen = []
        for x in levels[ell]:
            for i in range(n):
                y = simple_times(i, x)
                if is_grassmannian(y) and length(y) == ell + 1 and y not in seen:
                    seen.append(y)
        levels[ell + 1] = tuple(seen)
    return levels


def grassmannian_from_partition(la: Sequence[int], n: int) -> ExtAffinePerm:
    la = as_partition(la)
    if la and la[0] > n - 1:
        raise ShapeError(f"{list(la)} is not {n - 1}-bounded")
    for y in grassmannian_elements(n, size(la))[size(la)]:
        if bounded_partition_of(y) == la:
            return y
    raise InternalInvariantError(f"no Grassmannian element found for {list(la)}")


# Permutations to partitions

def lambda_of(w: Sequence[int]) -> Partition:
    """
    The partition with m_j parts equal to j.

    After priming until w(1) = 1, each m_j counts the left rotations of the
    suffix starting at position j + 1 needed to bring w(j + 1) to the front.
    """
    w = as_perm(w)
    n = len(w)
    while w[0] != 1:
        w = prime(w)
    cur = list(range(1, n + 1))
    multiplicities = []
    for p in range(2, n):
        shifts = 0
        while cur[p - 1] != w[p - 1]:
            cur[p - 1:] = cur[p:] + [cur[p - 1]]
            shifts += 1
        if shifts > n - p:
            raise InternalInvariantError(f"m_{p - 1} = {shifts} exceeds {n - p}")
        multiplicities.append(shifts)
    if tuple(cur) != w:
        raise InternalInvariantError(f"peeling {list(w)} ended at {cur}")
    parts = []
    for j in range(len(multiplicities), 0, -1):
        parts.extend([j] * multiplicities[j - 1])
    return tuple(parts)


def lemma_window(w: Sequence[int]) -> ExtAffinePerm:
    """y = w ∏_{i ∈ Des(w)} t_{-ω_i^∨}, so y(j) = w(j) - n #{i ∈ Des(w) : i >= j}."""
    w = as_perm(w)
    n = len(w)
    shift = [0] * n
    for i in descent_set(w):
        shift = coweight_add(shift, coweight_neg(omega(i, n)))
    return compose(from_perm(w), translation(shift))


def lambda_of_via_lemma(w: Sequence[int]) -> Partition:
    y = lemma_window(w)
    if not is_grassmannian(y):
        raise InternalInvariantError(f"{y} built from {list(w)} is not Grassmannian")
    return bounded_partition_of(grassmannian_part(y))


def coset_criterion(w: Sequence[int], mu: Sequence[int]) -> bool:
    """w t_μ is Grassmannian iff μ_{j+1} - μ_j >= 1 at descents of w and >= 0 elsewhere."""
    des = descent_set(w)
    return all(mu[j] - mu[j - 1] >= (1 if j in des else 0) for j in range(1, len(w)))


# Rectangle factors

class DFormulaReport(BaseModel):
    i: int
    n: int
    conjugation: bool
    rotation: bool
    translation: bool
    grassmannian: bool
    word_length: int

    @property
    def passed(self) -> bool:
        return self.conjugation and self.rotation and self.translation and self.grassmannian


def check_d_formulas(i: int, n: int) -> DFormulaReport:
    """d_i = τ_{i*} w_0^{ω_{i*}} τ_{i*}^{-1} = τ_{i*} t_{-ω_i} = w_0^{ω_{i*}} t_{-ω_i - ω_{i*}}."""
    d = d_element(i, n)
    star = n - i
    tau = special_rotation(star, n)
    w0 = from_perm(w0_omega(star, n))
    return DFormulaReport(
        i=i,
        n=n,
        conjugation=compose(compose(tau, w0), inverse(tau)) == d,
        rotation=compose(tau, translation(coweight_neg(omega(i, n)))) == d,
        translation=compose(w0, translation(coweight_neg(coweight_add(omega(i, n), omega(star, n))))) == d,
        grassmannian=is_grassmannian(d),
        word_length=len(reduced_word(d)),
    )


def _require_grassmannian(y: ExtAffinePerm) -> None:
    if not is_grassmannian(y):
        raise NotGrassmannian(y.window)


def i_reducible(y: ExtAffinePerm, i: int) -> bool:
    """ℓ(y d_i^{-1}) + ℓ(d_i) = ℓ(y)."""
    _require_grassmannian(y)
    d = d_element(i, y.n)
    return length(compose(y, inverse(d))) + length(d) == length(y)


def factor_step(y: ExtAffinePerm, i: int) -> ExtAffinePerm:
    """τ_i (y d_i^{-1}) τ_i^{-1}, again Grassmannian when y is i-reducible."""
    u = compose(y, inverse(d_element(i, y.n)))
    tau = special_rotation(i, y.n)
    z = grassmannian_part(compose(compose(tau, u), inverse(tau)))
    if not is_grassmannian(z):
        raise InternalInvariantError(f"factoring d_{i} out of {y} gave {z}")
    return z


def rectangle_factor_decomposition(y: ExtAffinePerm) -> Tuple[ExtAffinePerm, Tuple[int, ...]]:
    """Strip d_i factors greedily; returns the irreducible core and the multiplicities e_i."""
    _require_grassmannian(y)
    n = y.n
    exponents = [0] * (n - 1)
    cur = grassmannian_part(y)
    progress = True
    while progress:
        progress = False
        for i in range(1, n):
            if i_reducible(cur, i):
                cur = factor_step(cur, i)
                exponents[i - 1] += 1
                progress = True
                break
    return cur, tuple(exponents)


def partition_union(*parts: Sequence[int]) -> Partition:
    merged = []
    for la in parts:
        merged.extend(la)
    return tuple(sorted(merged, reverse=True))


def rectangles_union(exponents: Sequence[int], n: int) -> Partition:
    pieces = []
    for i, e in enumerate(exponents, start=1):
        pieces.extend([rect_partition(i, n)] * e)
    return partition_union(*pieces)

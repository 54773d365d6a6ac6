"""
The localization Λ_(n)[s_{R_1}^{-1}, ..., s_{R_{n-1}}^{-1}] and the substitution Φ.

A LocElem is num / ∏ s_{R_i}^{d_i}. There is no canonical form: equality is
decided by cross-multiplication and reduce() only strips rectangle factors
that divide the numerator exactly.
"""
from dataclasses import dataclass
from functools import lru_cache
import random
from typing import Any, Dict, List, Sequence, Tuple, Union

from algebra.errors import AlphabetMismatch, RankMismatch, ShapeError
from algebra.polyring import (
    H,
    AlphabetKind,
    Polynomial,
    XQ,
    alphabet_of,
    eval_hom,
    render,
    to_json,
    try_exact_divide,
)
from algebra.symfunc import rect_clipped_schur, rect_schur

# coefficient range for the random-point inequality pre-check
_POINT_RANGE = 97


@lru_cache(maxsize=None)
def _rect_power(i: int, e: int, n: int) -> Polynomial:
    if e == 0:
        return H(n).ring.one
    return _rect_power(i, e - 1, n) * rect_schur(i, n)


def denominator_poly(den: Sequence[int], n: int) -> Polynomial:
    out = H(n).ring.one
    for i, d in enumerate(den, start=1):
        if d:
            out = out * _rect_power(i, d, n)
    return out


@dataclass(frozen=True, eq=False)
class LocElem:
    num: Polynomial
    den: Tuple[int, ...]
    n: int

    def __post_init__(self):
        den = tuple(int(d) for d in self.den)
        if len(den) != self.n - 1:
            raise ShapeError(f"denominator vector {list(den)} does not have {self.n - 1} entries")
        if any(d < 0 for d in den):
            raise ShapeError(f"negative denominator exponent in {list(den)}")
        if alphabet_of(self.num) != H(self.n):
            raise AlphabetMismatch(alphabet_of(self.num), H(self.n))
        if not self.num:
            den = (0,) * (self.n - 1)
        object.__setattr__(self, "den", den)

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: "LocElem") -> "LocElem":
        return loc_add(self, _coerce(other, self.n))

    __radd__ = __add__

    def __sub__(self, other: "LocElem") -> "LocElem":
        return loc_add(self, loc_neg(_coerce(other, self.n)))

    def __neg__(self) -> "LocElem":
        return loc_neg(self)

    def __mul__(self, other: Union["LocElem", int]) -> "LocElem":
        if isinstance(other, int):
            return reduce(LocElem(self.num * other, self.den, self.n))
        return loc_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LocElem):
            return NotImplemented
        return loc_eq(self, other)

    __hash__ = None

    def __str__(self) -> str:
        return render_loc(self)


def _coerce(value: Union[LocElem, int], n: int) -> LocElem:
    if isinstance(value, LocElem):
        return value
    return LocElem(H(n).ring.ground_new(value), (0,) * (n - 1), n)


def _check_rank(a: LocElem, b: LocElem) -> None:
    if a.n != b.n:
        raise RankMismatch(a.n, b.n)


# Constructors

def loc_from_poly(p: Polynomial) -> LocElem:
    n = alphabet_of(p).n
    return LocElem(p, (0,) * (n - 1), n)


def loc_one(n: int) -> LocElem:
    return loc_from_poly(H(n).ring.one)


def loc_zero(n: int) -> LocElem:
    return loc_from_poly(H(n).ring.zero)


def rect_inverse(i: int, n: int) -> LocElem:
    """1 / s_{R_i}; the boundary rectangles give 1."""
    if not 0 <= i <= n:
        raise ShapeError(f"rectangle index {i} outside [0, {n}]")
    if i in (0, n):
        return loc_one(n)
    den = [0] * (n - 1)
    den[i - 1] = 1
    return LocElem(H(n).ring.one, tuple(den), n)


def over_rect(p: Polynomial, i: int) -> LocElem:
    """p / s_{R_i}."""
    n = alphabet_of(p).n
    inv = rect_inverse(i, n)
    return LocElem(p, inv.den, n)


# Arithmetic

def reduce(a: LocElem) -> LocElem:
    if a.is_zero():
        return a
    num = a.num
    den = list(a.den)
    for i in range(1, a.n):
        while den[i - 1] > 0:
            quotient = try_exact_divide(num, rect_schur(i, a.n))
            if quotient is None:
                break
            num = quotient
            den[i - 1] -= 1
    return LocElem(num, tuple(den), a.n)


def loc_neg(a: LocElem) -> LocElem:
    return LocElem(-a.num, a.den, a.n)


def _lift(a: LocElem, den: Sequence[int]) -> Polynomial:
    extra = [d - e for d, e in zip(den, a.den)]
    return a.num * denominator_poly(extra, a.n)


def loc_sum(values: List[LocElem]) -> LocElem:
    """Sum over a common denominator, reduced once at the end."""
    if not values:
        raise ShapeError("empty sum has no rank")
    n = values[0].n
    for v in values[1:]:
        _check_rank(values[0], v)
    nonzero = [v for v in values if not v.is_zero()]
    if not nonzero:
        return loc_zero(n)
    den = tuple(max(v.den[i] for v in nonzero) for i in range(n - 1))
    num = H(n).ring.zero
    for v in nonzero:
        num += _lift(v, den)
    return reduce(LocElem(num, den, n))


def loc_add(a: LocElem, b: LocElem) -> LocElem:
    _check_rank(a, b)
    return loc_sum([a, b])


def loc_mul(a: LocElem, b: LocElem) -> LocElem:
    _check_rank(a, b)
    den = tuple(x + y for x, y in zip(a.den, b.den))
    return reduce(LocElem(a.num * b.num, den, a.n))


def _cross(a: LocElem, b: LocElem) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    common = [min(x, y) for x, y in zip(a.den, b.den)]
    return (
        tuple(y - c for y, c in zip(b.den, common)),
        tuple(x - c for x, c in zip(a.den, common)),
    )


def _differs_at_a_point(a: LocElem, b: LocElem, seed: int = 0) -> bool:
    rng = random.Random(seed)
    point = [rng.randint(-_POINT_RANGE, _POINT_RANGE) for _ in range(a.n - 1)]
    rects = [rect_schur(i, a.n)(*point) for i in range(1, a.n)]
    left_extra, right_extra = _cross(a, b)

    def value(elem: LocElem, extra: Sequence[int]):
        out = elem.num(*point)
        for r, e in zip(rects, extra):
            out *= r ** e
        return out

    return value(a, left_extra) != value(b, right_extra)


def loc_eq(a: LocElem, b: LocElem, spot_check: bool = True) -> bool:
    """a.num * S^{b.den} == b.num * S^{a.den}, after cancelling common rectangle powers."""
    _check_rank(a, b)
    if spot_check and _differs_at_a_point(a, b):
        return False
    left_extra, right_extra = _cross(a, b)
    return a.num * denominator_poly(left_extra, a.n) == b.num * denominator_poly(right_extra, a.n)


# The substitution

def partial_sum_image(i: int, n: int) -> LocElem:
    """P_i = s_{R'_i} / s_{R_i}, the image of x_1 + ... + x_i; P_0 = P_n = 0."""
    if i in (0, n):
        return loc_zero(n)
    return over_rect(rect_clipped_schur(i, n), i)


def q_image(i: int, n: int) -> LocElem:
    den = [0] * (n - 1)
    den[i - 1] = 2
    return LocElem(rect_schur(i - 1, n) * rect_schur(i + 1, n), tuple(den), n)


@lru_cache(maxsize=None)
def phi_images(n: int) -> Dict[str, LocElem]:
    images = {}
    for i in range(1, n + 1):
        images[f"x{i}"] = loc_add(partial_sum_image(i, n), loc_neg(partial_sum_image(i - 1, n)))
    for i in range(1, n):
        images[f"q{i}"] = q_image(i, n)
    return images


def phi(p: Polynomial) -> LocElem:
    """Ring homomorphism Z[x, q] -> Λ_(n)[s_R^{-1}]."""
    alphabet = alphabet_of(p)
    if alphabet.kind == AlphabetKind.H:
        raise AlphabetMismatch(alphabet, XQ(alphabet.n))
    n = alphabet.n
    return eval_hom(p, phi_images(n), one=loc_one(n), total=loc_sum)


def phi_prime_q(coweight: Sequence[int], n: int) -> LocElem:
    """
    q_lambda -> ∏ s_{R_i}^{-c_i}, where lambda = Σ c_i ω_i^∨ modulo (1, ..., 1).
    """
    if len(coweight) != n:
        raise RankMismatch(len(coweight), n)
    ring = H(n).ring
    num = ring.one
    den = []
    for i in range(1, n):
        c = coweight[i - 1] - coweight[i]
        if c < 0:
            num = num * _rect_power(i, -c, n)
        den.append(max(c, 0))
    return LocElem(num, tuple(den), n)


# Text and JSON

def render_loc(a: LocElem) -> str:
    num = render(a.num)
    if not any(a.den):
        return num
    factors = "*".join(f"sR{i}" if d == 1 else f"sR{i}^{d}" for i, d in enumerate(a.den, start=1) if d)
    if len(a.num) > 1:
        num = f"({num})"
    return f"{num} / {factors}"


def loc_to_json(a: LocElem) -> Dict[str, Any]:
    return {"num": to_json(a.num), "den": list(a.den)}

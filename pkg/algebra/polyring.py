"""
Sparse exact multivariate polynomials over the integers.

A Polynomial is a sympy ``PolyElement`` of the ring attached to a
VarAlphabet: a dict from exponent tuples to nonzero integer coefficients.
Each alphabet owns exactly one ring, so two polynomials share an alphabet
iff they share a ring, and structural equality is semantic equality.
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, reduce
import operator
import re
from tokenize import TokenError
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from sympy import Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from algebra.errors import AlgebraError, AlphabetMismatch, InexactDivision, MissingImage, ShapeError

Polynomial = PolyElement
Monomial = Tuple[int, ...]


class AlphabetKind(str, Enum):
    X = "X"
    Q = "Q"
    XQ = "XQ"
    H = "H"


@dataclass(frozen=True)
class VarAlphabet:
    kind: AlphabetKind
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ShapeError(f"rank must be at least 2, got {self.n}")

    @property
    def names(self) -> Tuple[str, ...]:
        return _names(self.kind, self.n)

    @property
    def ring(self) -> PolyRing:
        return _ring(self.kind, self.n)

    @property
    def display_order(self) -> Tuple[int, ...]:
        # h-monomials read as h_mu with mu decreasing
        if self.kind == AlphabetKind.H:
            return tuple(reversed(range(len(self.names))))
        return tuple(range(len(self.names)))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError(f"variable {name} is not in alphabet {self}")

    def gen(self, name: str) -> Polynomial:
        return self.ring.gens[self.index(name)]

    def __str__(self) -> str:
        return f"{self.kind.value}({self.n})"


def X(n: int) -> VarAlphabet:
    return VarAlphabet(AlphabetKind.X, n)


def Q(n: int) -> VarAlphabet:
    return VarAlphabet(AlphabetKind.Q, n)


def XQ(n: int) -> VarAlphabet:
    return VarAlphabet(AlphabetKind.XQ, n)


def H(n: int) -> VarAlphabet:
    return VarAlphabet(AlphabetKind.H, n)


def _names(kind: AlphabetKind, n: int) -> Tuple[str, ...]:
    xs = tuple(f"x{i}" for i in range(1, n + 1))
    qs = tuple(f"q{i}" for i in range(1, n))
    if kind == AlphabetKind.X:
        return xs
    if kind == AlphabetKind.Q:
        return qs
    if kind == AlphabetKind.XQ:
        return qs + xs
    return tuple(f"h{i}" for i in range(1, n))


_ALPHABET_OF_RING: Dict[PolyRing, VarAlphabet] = {}


@lru_cache(maxsize=None)
def _ring(kind: AlphabetKind, n: int) -> PolyRing:
    ring = PolyRing(",".join(_names(kind, n)), ZZ, grlex)
    _ALPHABET_OF_RING[ring] = VarAlphabet(kind, n)
    return ring


def alphabet_of(p: Polynomial) -> VarAlphabet:
    try:
        return _ALPHABET_OF_RING[p.ring]
    except (KeyError, AttributeError):
        raise AlgebraError(f"{p!r} is not a polynomial over a declared alphabet")


def _check_same(a: Polynomial, b: Polynomial) -> None:
    if a.ring != b.ring:
        raise AlphabetMismatch(alphabet_of(a), alphabet_of(b))


# Construction

def from_terms(alphabet: VarAlphabet, terms: Mapping[Monomial, int]) -> Polynomial:
    return alphabet.ring.from_dict({tuple(m): int(c) for m, c in terms.items()})


# Ring operations

def add(a: Polynomial, b: Polynomial) -> Polynomial:
    _check_same(a, b)
    return a + b


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    _check_same(a, b)
    return a - b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    _check_same(a, b)
    return a * b


def negate(a: Polynomial) -> Polynomial:
    return -a


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient a/b; raises InexactDivision when the remainder is nonzero."""
    _check_same(a, b)
    if not b:
        raise InexactDivision("division by the zero polynomial")
    try:
        return a.exquo(b)
    except ExactQuotientFailed:
        raise InexactDivision(f"{render(b)} does not divide {render(a)}")


def try_exact_divide(a: Polynomial, b: Polynomial) -> Optional[Polynomial]:
    try:
        return exact_divide(a, b)
    except InexactDivision:
        return None


# Inspection

def variables_of(p: Polynomial) -> List[str]:
    names = alphabet_of(p).names
    used = set()
    for monom in p.itermonoms():
        used.update(i for i, e in enumerate(monom) if e)
    return [names[i] for i in sorted(used)]


def total_degree(p: Polynomial) -> int:
    if not p:
        return -1
    return max(sum(m) for m in p.itermonoms())


def weighted_degree(monom: Monomial, weights: Iterable[int]) -> int:
    return sum(e * w for e, w in zip(monom, weights))


def embed(p: Polynomial, target: VarAlphabet) -> Polynomial:
    """Re-read p over a larger alphabet, matching variables by name."""
    source = alphabet_of(p)
    if source == target:
        return p
    positions = []
    for name in source.names:
        positions.append(target.names.index(name) if name in target.names else None)
    terms = {}
    for monom, coeff in p.iterterms():
        new = [0] * len(target.names)
        for i, e in enumerate(monom):
            if not e:
                continue
            if positions[i] is None:
                raise AlphabetMismatch(source, target)
            new[positions[i]] = e
        terms[tuple(new)] = coeff
    return target.ring.from_dict(terms)


def truncate_to(p: Polynomial, target: VarAlphabet) -> Polynomial:
    """Set every variable missing from ``target`` to zero and re-read over it."""
    source = alphabet_of(p)
    keep = [i for i, name in enumerate(source.names) if name in target.names]
    dropped = [i for i in range(len(source.names)) if i not in keep]
    kept = source.ring.from_dict(
        {m: c for m, c in p.iterterms() if all(m[i] == 0 for i in dropped)}
    )
    return embed(kept, target)


# Ring homomorphisms

def eval_hom(
    p: Polynomial,
    images: Mapping[str, Any],
    *,
    one: Any,
    total: Optional[Callable[[List[Any]], Any]] = None,
) -> Any:
    """
    Evaluate p under the ring homomorphism sending each variable to ``images[name]``.

    :param images: variable name -> image; images must support +, * and * by int.
    :param one: the unit of the target ring (constants map to multiples of it).
    :param total: optional summation of the per-term images (defaults to repeated +).
    """
    missing = [name for name in variables_of(p) if name not in images]
    if missing:
        raise MissingImage(missing)
    names = alphabet_of(p).names
    powers: Dict[Tuple[str, int], Any] = {}

    def power(name: str, e: int):
        key = (name, e)
        if key not in powers:
            powers[key] = images[name] if e == 1 else power(name, e - 1) * images[name]
        return powers[key]

    values = []
    for monom, coeff in p.terms(order=grlex):
        value = one * int(coeff)
        for i, e in enumerate(monom):
            if e:
                value = value * power(names[i], e)
        values.append(value)
    if not values:
        return one * 0
    if total is not None:
        return total(values)
    return reduce(operator.add, values)


# Text and JSON

def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def render(p: Polynomial) -> str:
    if not p:
        return "0"
    alphabet = alphabet_of(p)
    names = alphabet.names
    out = []
    for monom, coeff in p.terms(order=grlex):
        c = int(coeff)
        body = "*".join(_power(names[i], monom[i]) for i in alphabet.display_order if monom[i])
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not out:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(out)


# names, integers, operators, parentheses; nothing else reaches parse_expr
_TOKEN = re.compile(r"\s*(?:([A-Za-z_]\w*)|(\d+)|(\*\*|[-+*^()]))")


def _screen(text: str, alphabet: VarAlphabet) -> None:
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if match is None or match.end() == pos:
            raise AlgebraError(f"cannot read {text!r}: unexpected character at position {pos}")
        name = match.group(1)
        if name is not None and name not in alphabet.names:
            raise AlgebraError(f"cannot read {text!r}: {name} is not a variable of {alphabet}")
        pos = match.end()


def parse(text: str, alphabet: VarAlphabet) -> Polynomial:
    _screen(text, alphabet)
    local = {name: Symbol(name) for name in alphabet.names}
    try:
        expr = parse_expr(text, local_dict=local, transformations=standard_transformations + (convert_xor,))
        return alphabet.ring.from_expr(expr)
    except (SyntaxError, TokenError, TypeError, ValueError) as e:
        raise AlgebraError(f"cannot read {text!r} as a polynomial over {alphabet}: {e}")


def to_json(p: Polynomial) -> List[Dict[str, Any]]:
    names = alphabet_of(p).names
    return [
        {
            "exponents": {names[i]: e for i, e in enumerate(monom) if e},
            "coeff": str(int(coeff)),
        }
        for monom, coeff in p.terms(order=grlex)
    ]


def from_json(data: List[Dict[str, Any]], alphabet: VarAlphabet) -> Polynomial:
    terms = {}
    for item in data:
        monom = [0] * len(alphabet.names)
        for name, e in item["exponents"].items():
            monom[alphabet.index(name)] = int(e)
        key = tuple(monom)
        terms[key] = terms.get(key, 0) + int(item["coeff"])
    return from_terms(alphabet, terms)

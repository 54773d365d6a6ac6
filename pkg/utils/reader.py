from typing import List, Optional

from algebra.affine import ExtAffinePerm
from algebra.errors import AlgebraError, RankMismatch, ShapeError
from algebra.polyring import Polynomial, VarAlphabet, parse
from algebra.schubert import Perm, as_perm
from algebra.symfunc import Partition, as_partition


def _integers(text: str, what: str) -> List[int]:
    """
    Splits comma-separated integers, tolerating brackets and spaces.

    Args:
        text (str): e.g. "2,1,3" or "[2, 1, 3]".
        what (str): used in the error message.

    Returns:
        List[int]: the parsed values.
    """
    stripped = text.strip().strip("[]()")
    if not stripped:
        return []
    try:
        return [int(token) for token in stripped.split(",")]
    except ValueError:
        raise ShapeError(f"cannot read {what} from {text!r}")


def parse_perm(text: str, n: Optional[int] = None) -> Perm:
    w = as_perm(_integers(text, "a permutation"))
    if n is not None and len(w) != n:
        raise RankMismatch(len(w), n)
    return w


def parse_partition(text: str) -> Partition:
    values = _integers(text, "a partition")
    if any(v < 0 for v in values) or any(a < b for a, b in zip(values, values[1:])):
        raise ShapeError(f"{values} is not a partition")
    return as_partition(values)


def parse_window(text: str, n: Optional[int] = None) -> ExtAffinePerm:
    x = ExtAffinePerm(tuple(_integers(text, "a window")))
    if n is not None and x.n != n:
        raise RankMismatch(x.n, n)
    return x


def parse_polynomial(text: str, alphabet: VarAlphabet) -> Polynomial:
    """Reads "x1^2*x2 + q1*x1" style input; unknown names raise AlgebraError."""
    try:
        return parse(text, alphabet)
    except AlgebraError:
        raise
    except Exception as e:
        raise AlgebraError(f"cannot read a polynomial over {alphabet.kind.value}({alphabet.n}) from {text!r}: {e}")

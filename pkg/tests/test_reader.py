import pytest

from algebra.affine import affine_identity
from algebra.errors import AlgebraError, RankMismatch, ShapeError
from algebra.polyring import XQ, parse
from utils.reader import parse_partition, parse_perm, parse_polynomial, parse_window


@pytest.mark.parametrize("text", ["2,1,3", "[2, 1, 3]", " (2,1,3) "])
def test_parse_perm(text):
    assert parse_perm(text) == (2, 1, 3)
    assert parse_perm(text, 3) == (2, 1, 3)


def test_parse_perm_errors():
    with pytest.raises(ShapeError):
        parse_perm("2,2,1")
    with pytest.raises(ShapeError):
        parse_perm("2;1;3")
    with pytest.raises(RankMismatch):
        parse_perm("2,1,3", 4)


def test_parse_partition():
    assert parse_partition("2,1") == (2, 1)
    assert parse_partition("3,1,0") == (3, 1)
    assert parse_partition("") == ()
    with pytest.raises(ShapeError):
        parse_partition("1,2")
    with pytest.raises(ShapeError):
        parse_partition("a,b")


def test_parse_window():
    assert parse_window("4,5,6").window == (4, 5, 6)
    assert parse_window("4,5,6") == affine_identity(3)
    assert parse_window("[0, 2, 4]", 3).window == (0, 2, 4)
    with pytest.raises(ShapeError):
        parse_window("1,4,3")
    with pytest.raises(RankMismatch):
        parse_window("1,2,3", 4)


def test_parse_polynomial():
    assert parse_polynomial("x1^2*x2 + q1*x1", XQ(3)) == parse("x1^2*x2 + q1*x1", XQ(3))
    with pytest.raises(AlgebraError):
        parse_polynomial("x1 +", XQ(3))
    with pytest.raises(AlgebraError):
        parse_polynomial("x1 + y7", XQ(3))

"""
Exceptions raised by the algebra modules.

User-facing problems (bad input, objects outside a span) derive from
AlgebraError, which is a ValueError. Conditions that can only come from a
bug derive from InternalInvariantError.
"""


class AlgebraError(ValueError):
    """Base class for invalid input or out-of-domain requests."""


class AlphabetMismatch(AlgebraError):
    def __init__(self, left, right):
        super().__init__(f"incompatible alphabets: {left} and {right}")


class RankMismatch(AlgebraError):
    def __init__(self, left: int, right: int):
        super().__init__(f"rank mismatch: {left} != {right}")


class MissingImage(AlgebraError):
    def __init__(self, variables):
        names = ", ".join(str(v) for v in variables)
        super().__init__(f"no image given for variable(s): {names}")


class NotHomogeneous(AlgebraError):
    pass


class NotInSpan(AlgebraError):
    pass


class ShapeError(AlgebraError):
    pass


class NotGrassmannian(AlgebraError):
    def __init__(self, window):
        super().__init__(f"window {list(window)} is not affine Grassmannian")


class InternalInvariantError(RuntimeError):
    """An identity that must hold by construction failed."""


class InexactDivision(AlgebraError):
    pass

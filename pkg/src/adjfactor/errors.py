class RingMismatch(TypeError):
    """Operands belong to different rings, or a value does not fit the ring."""


class NotAUnit(ArithmeticError):
    pass


class NotInvertible(ArithmeticError):
    """Matrix whose determinant is not a unit of its ring."""


class NotAlternating(ValueError):
    pass


class OddSize(ValueError):
    pass


class BadAlternatingDet(ValueError):
    """Alternating input whose determinant is not exactly 1."""


class InvalidWitness(ValueError):
    """A claimed solution of A adj(X)^T = X B that does not satisfy it."""

"""Exception types.

Every error carries a stable ``code`` string, used by the command line
front end for machine-readable diagnostics.
"""


class FlipcatError(ValueError):
    code = "error"


class NotPerfect(FlipcatError):
    code = "not_perfect"


class Crossing(FlipcatError):
    code = "crossing"


class IndexOutOfRange(FlipcatError):
    code = "index_out_of_range"


class Unbalanced(FlipcatError):
    code = "unbalanced"


class InvalidDegrees(FlipcatError):
    code = "invalid_degrees"


class InvalidTriangulation(FlipcatError):
    code = "invalid_triangulation"


class ResourceLimit(FlipcatError):
    code = "resource_limit"


class SizeMismatch(FlipcatError):
    code = "size_mismatch"


class NotADiagonal(FlipcatError):
    code = "not_a_diagonal"


class InvalidMove(FlipcatError):
    code = "invalid_move"


class IllegalFlip(FlipcatError):
    code = "illegal_flip"


class NotGeneralPosition(FlipcatError):
    """Raised for matching-flips with adjacent indices.

    ``cases`` lists which of the degenerate situations apply:
    1 for ``j == i + 1``, 2 for ``k == j + 1``, 3 for ``l == k + 1``.
    """

    code = "not_general_position"

    def __init__(self, message, cases=()):
        super().__init__(message)
        self.cases = tuple(cases)

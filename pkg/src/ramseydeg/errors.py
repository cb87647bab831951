"""Exception hierarchy shared by every module."""


class RamseyDegError(Exception):
    """Base class for all package errors."""


class InvalidInput(RamseyDegError, ValueError):
    pass


class LoopEdge(InvalidInput):
    pass


class VertexOutOfRange(InvalidInput):
    pass


class InvalidColoring(InvalidInput):
    pass


class MissingColoring(InvalidInput):
    pass


class NotOrdered(InvalidInput):
    pass


class InvalidExtension(InvalidInput):
    pass


class NotNColorable(InvalidInput):
    pass


class ParseError(InvalidInput):
    """Malformed payload; ``offset`` is the byte position of the problem."""

    def __init__(self, message, offset=0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SizeCapExceeded(RamseyDegError):
    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class BudgetExceeded(RamseyDegError):
    def __init__(self, budget, reached):
        super().__init__(f"search budget {budget} exhausted after {reached} nodes")
        self.budget = budget
        self.reached = reached

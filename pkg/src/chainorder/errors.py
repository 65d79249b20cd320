"""Exception types raised by chainorder."""


class ChainError(ValueError):
    """Base class for invalid input to any chainorder operation."""


class EmptyInput(ChainError):
    pass


class NonBinarySymbol(ChainError):
    pass


class UnbalancedCounts(ChainError):
    pass


class InvalidCutPosition(ChainError):
    pass


class ParameterOutOfRange(ChainError):
    pass


class DegenerateN(ChainError):
    """Raised when n < 2, where the two poles coincide."""


class TopologyMismatch(ChainError):
    pass


class LengthMismatch(ChainError):
    pass


class TooLarge(ChainError):
    pass


class DivergentWeight(ChainError):
    pass


class UnknownExperiment(ChainError):
    pass


class Unreachable(RuntimeError):
    """A BFS target was not reachable. Means a broken move generator."""

"""Exception hierarchy shared by the game solver and the polynomial tools."""


class DiscGamesError(Exception):
    """Base class for every error raised by this package."""


class GameError(DiscGamesError, ValueError):
    pass


class EmptySuccessorSet(GameError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has no outgoing edge")
        self.vertex = vertex


class DanglingVertexId(GameError):
    pass


class DuplicateEdge(GameError):
    pass


class InvalidStrategy(GameError):
    pass


class GameParseError(GameError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class LambdaOutOfRange(DiscGamesError, ValueError):
    def __init__(self, lam):
        super().__init__(f"discount factor {lam} is not in [0, 1)")
        self.lam = lam


class LambdaBelowThreshold(LambdaOutOfRange):
    def __init__(self, lam, lambda0):
        DiscGamesError.__init__(self, f"discount factor {lam} is below the threshold {lambda0}")
        self.lam = lam
        self.lambda0 = lambda0


class GuardExceeded(DiscGamesError):
    """An enumeration would exceed its configured size guard."""


class TooManyProfiles(GuardExceeded):
    pass


class SearchSpaceTooLarge(GuardExceeded):
    pass


class ZeroPolynomial(DiscGamesError, ValueError):
    pass


class IndexOutOfRange(DiscGamesError, IndexError):
    pass


class PreconditionViolated(DiscGamesError, ValueError):
    pass


class CountingConditionFails(PreconditionViolated):
    pass


class InvariantViolation(DiscGamesError, AssertionError):
    """A property that the theory guarantees did not hold."""

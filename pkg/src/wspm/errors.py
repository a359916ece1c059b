"""Exception hierarchy shared by every module of the package."""


class WSPMError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WSPMError, ValueError):
    """Malformed graph input (loops, out-of-range endpoints, empty graph)."""


class ParseError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BadParams(InputError):
    """Generator parameters out of range."""


class NotCubic(WSPMError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")
        self.vertex = vertex
        self.degree = degree


class Disconnected(WSPMError):
    pass


class HasBridge(WSPMError):
    def __init__(self, edge: int):
        super().__init__(f"edge {edge} is a bridge")
        self.edge = edge


class DeadEdge(WSPMError, KeyError):
    def __init__(self, edge: int):
        super().__init__(edge)
        self.edge = edge

    def __str__(self) -> str:
        return f"edge {self.edge} is not live"


class SameVertex(WSPMError, ValueError):
    pass


class TooLarge(WSPMError):
    """An exhaustive enumeration was refused because the input exceeds the cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"size {size} exceeds enumeration cap {cap}")
        self.size = size
        self.cap = cap


class ComponentCountMismatch(WSPMError):
    def __init__(self, count: int):
        super().__init__(f"expected 2 components, found {count}")
        self.count = count


class NotTwoCut(WSPMError):
    pass


class LoopWouldForm(WSPMError, AssertionError):
    pass


class NotCactus(WSPMError, AssertionError):
    pass


class RepresentationGap(WSPMError):
    pass


class NotDegree2(WSPMError):
    pass


class NotCactusCut(WSPMError):
    pass


class NoWSPM(WSPMError, AssertionError):
    """The exact search exhausted without a well-spread perfect matching.

    On a valid 3-edge-connected cubic input this cannot happen, so it always
    points at a bad input or a bug.
    """


class BudgetExceeded(WSPMError):
    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} node expansions exceeded")
        self.budget = budget


class AgreementViolated(WSPMError, AssertionError):
    pass

"""Exception hierarchy shared by every module of the package."""


class GParkingError(Exception):
    """Base class for all errors raised by gparking."""


# graph construction

class GraphError(GParkingError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class DimensionTooLarge(GraphError):
    pass


class EqualVertices(GParkingError, ValueError):
    pass


class EmptyNeighborSet(GParkingError, ValueError):
    pass


# parking functions

class ParkingError(GParkingError, ValueError):
    pass


class BadRootValue(ParkingError):
    pass


class NegativeValue(ParkingError):
    pass


class NotParkingFunction(ParkingError):
    """Raised with the unburnt residual set attached as ``residual``."""

    def __init__(self, message, residual=()):
        super().__init__(message)
        self.residual = frozenset(residual)


class MismatchedGraph(ParkingError):
    pass


class MismatchedRoot(ParkingError):
    pass


class NotMaximum(ParkingError):
    pass


class TooManyMaxFunctions(ParkingError):
    pass


class WrongGraph(ParkingError):
    pass


class MeetMismatch(GParkingError, RuntimeError):
    """Internal consistency failure; never expected on valid input."""


# orientations

class OrientationError(GParkingError, ValueError):
    pass


class NotAcyclic(OrientationError):
    pass


class SourceNotUnique(OrientationError):
    pass


class WrongSource(OrientationError):
    pass


class SinkNotUnique(OrientationError):
    pass


class IndegreeOvershoot(GParkingError, RuntimeError):
    """A vertex received more in-edges than its value allows during Extended Dhar."""


# trees

class NotSpanningTree(GParkingError, ValueError):
    pass


class NotSafeTree(GParkingError, ValueError):
    pass


# polynomials

class TooManyEdges(GParkingError, ValueError):
    pass


# diffuse states

class DiffuseError(GParkingError, ValueError):
    pass


class NegativeChips(DiffuseError):
    pass


class NotDiffuse(DiffuseError):
    """Raised with the stuck residual vertex set attached as ``residual``."""

    def __init__(self, message, residual=()):
        super().__init__(message)
        self.residual = frozenset(residual)


class WrongChipTotal(DiffuseError):
    pass


# text formats

class FormatError(GParkingError, ValueError):
    pass

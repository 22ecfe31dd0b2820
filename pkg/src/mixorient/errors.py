"""Exception hierarchy shared by every module of the package."""


class MixorientError(Exception):
    """Base class for all package errors."""


# graph-core
class GraphError(MixorientError):
    pass


class BadVertex(GraphError):
    pass


class LoopRejected(GraphError):
    pass


class DuplicatePair(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class NoEdge(GraphError):
    pass


class ParseError(GraphError):
    pass


# reach / stage1
class NotConnected(MixorientError):
    pass


class NoCycle(MixorientError):
    """An edge at the pivot lies on no orientable cycle."""


class NotBridgeless(MixorientError):
    pass


# hu-builder: every one of these signals a construction bug, not bad input
class ConstructionError(MixorientError):
    pass


class Unreachable(ConstructionError):
    pass


class IncompatibleOrientation(ConstructionError):
    pass


class NoEligibleX(ConstructionError):
    pass


class ZNotCovered(ConstructionError):
    pass


class MultipleZ0(ConstructionError):
    pass


class MultipleT0(ConstructionError):
    pass


# orientation engine
class NoStrongExtension(MixorientError):
    pass


class BoundViolated(MixorientError):
    pass


class NotBipartite(MixorientError):
    pass


# oracle
class TooManyEdges(MixorientError):
    pass


# generators
class BadParam(MixorientError):
    pass


class UnsupportedFigureOnly(BadParam):
    """The requested family member is only given as a figure."""


class ConstructionMismatch(MixorientError):
    pass


class RetriesExhausted(MixorientError):
    pass

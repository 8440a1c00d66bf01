"""Exception hierarchy shared by all modules."""


class SquareColoringError(Exception):
    """Base class for every error raised by this package."""


# -- embedding construction and edits ---------------------------------------

class EmbeddingError(SquareColoringError, ValueError):
    """The rotation system does not describe a simple plane graph."""


class AsymmetricAdjacency(EmbeddingError):
    pass


class DuplicateNeighbor(EmbeddingError):
    pass


class IdOutOfRange(EmbeddingError):
    pass


class SelfLoop(EmbeddingError):
    pass


class NonPlanarRotation(EmbeddingError):
    """Some component violates V - E + F = 2 (the rotation has positive genus)."""


class NoSuchVertex(SquareColoringError, KeyError):
    pass


class NoSuchEdge(SquareColoringError, KeyError):
    pass


class NotOnSameFace(EmbeddingError):
    pass


class EdgeExists(EmbeddingError):
    pass


class EPGParseError(SquareColoringError, ValueError):
    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


# -- metrics ----------------------------------------------------------------

class DegenerateFaces(SquareColoringError, ValueError):
    """The small faces around a vertex overlap, so the face-count bound does not apply."""


# -- reductions -------------------------------------------------------------

class InvalidChord(SquareColoringError, ValueError):
    pass


class StaleWitness(SquareColoringError, ValueError):
    pass


class IrreducibleGraph(SquareColoringError, RuntimeError):
    """No reducible configuration was found.

    ``audit`` carries the discharging report for the offending graph when it
    is connected, else ``None``.
    """

    def __init__(self, message, audit=None):
        super().__init__(message)
        self.audit = audit


# -- coloring ---------------------------------------------------------------

class PartialColoring(SquareColoringError, ValueError):
    pass


class NoColorAvailable(SquareColoringError, RuntimeError):
    pass


class DegreeTooHigh(SquareColoringError, ValueError):
    pass


class NotConnected(SquareColoringError, ValueError):
    pass


# -- oracle / generators ----------------------------------------------------

class TooLarge(SquareColoringError, ValueError):
    pass


class UnknownName(SquareColoringError, ValueError):
    pass


class Unsatisfiable(SquareColoringError, ValueError):
    pass

"""Exception hierarchy for diagram parsing, validation and computation."""


class KhovlapError(Exception):
    """Base class for all errors raised by this package."""


class PDSyntaxError(KhovlapError):
    """Malformed PD-code text. Carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DiagramError(KhovlapError):
    """Base class for semantic problems with a diagram."""


class EmptyDiagramError(DiagramError):
    pass


class LabelCountError(DiagramError):
    pass


class NonContiguousComponentError(DiagramError):
    pass


class UnknownEdgeError(DiagramError):
    pass


class ComputationError(KhovlapError):
    """Base class for failures of the computation pipeline itself."""


class ComplexViolationError(ComputationError):
    """d∘d != 0, a degree leak, or an Euler-characteristic mismatch."""

    def __init__(self, message: str, r=None, q=None):
        super().__init__(message)
        self.r = r
        self.q = q


class OracleMismatchError(ComputationError):
    """Eigensolver zero-multiplicity disagrees with the exact rank oracle."""


class NonDivisibleError(ComputationError):
    """Graded Euler characteristic not divisible by q + q^-1."""


class EigenConvergenceError(ComputationError):
    """Jacobi iteration failed to converge within the sweep cap."""

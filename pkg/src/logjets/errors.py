"""Exception types shared across the library.

Every failure mode that a caller may want to branch on gets its own class;
the CLI maps them onto its exit-code contract (2 for bad input, 1 for a
mathematical check that did not hold).
"""


class LogJetsError(Exception):
    """Base class for all library errors."""


class DomainError(LogJetsError):
    """An argument is outside the domain a formula is stated for."""


class SingularSystem(LogJetsError):
    """Linear system whose determinant is identically zero."""


class DegreeMismatch(LogJetsError):
    """Oversampled interpolation data is inconsistent with the stated degree."""


class RankUnsupported(LogJetsError):
    """Bundle operation defined only for rank-2 input."""


class ResidueMismatch(LogJetsError):
    """The residue classes mod 3 disagree on the degree-4 coefficient.

    This always signals an implementation bug, never bad user input.
    """


class DegreeError(LogJetsError):
    """Intersection monomial does not have top degree on the 2-level tower."""


class NotSingular(LogJetsError):
    """Vector field germ does not vanish at the origin."""


class NotSaddleNode(LogJetsError):
    """Saddle-node-only operation applied to a different singularity type."""


class NotInvariant(LogJetsError):
    """The line is not invariant for the vector field."""


class IrrationalSingularity(LogJetsError):
    """A singular point on the line has non-rational coordinates."""

    def __init__(self, factor, message=None):
        self.factor = factor
        super().__init__(message or f"non-rational singular abscissae: roots of {factor}")


class IrrationalDirection(LogJetsError):
    """A singular direction on the exceptional line is a non-rational root."""

    def __init__(self, factor, message=None):
        self.factor = factor
        super().__init__(message or f"non-rational singular directions: roots of {factor}")


class DepthExceeded(LogJetsError):
    """Blow-up recursion hit the depth bound; carries the partial tree."""

    def __init__(self, tree, message=None):
        self.tree = tree
        super().__init__(message or "blow-up depth bound exceeded")

"""Exception types shared across the package."""


class BinoidError(Exception):
    """Base class for all errors raised by binoidtop."""


class UnknownGenerator(BinoidError):
    """A word or exponent map references a generator that was not declared."""


class UntamedPresentation(BinoidError):
    """Rewriting completion did not finish within the configured budget."""


class ZeroArgument(BinoidError):
    """An operation that needs a nonzero element received the zero class."""


class BoundExceeded(BinoidError):
    """A bounded search ended without a completeness certificate."""


class EnumerationCapExceeded(BinoidError):
    """Too many generators for subset enumeration of the prime spectrum."""


class IncompleteIdempotents(BinoidError):
    """The admissible decomposition needs a complete idempotent listing."""


class InvalidBlock(BinoidError):
    """The given idempotent block is not an element of Adm(M)."""


class NotAHomomorphism(BinoidError):
    """Generator images do not respect the relations of the source."""


class UnitExpressionFailure(BinoidError):
    """The image of a unit could not be written in the target unit basis."""


class NonCommutingDiagram(BinoidError):
    """A poset diagram of groupoids or binoids fails to commute."""


class ParseError(BinoidError):
    """A document does not match the expected file format."""


class NonFunctorial(BinoidError):
    """Scheme gluing data violates a relation or a commuting square."""


class MissingIntersection(BinoidError):
    """The declared intersections are not closed under taking subsets."""


class ConditionCheckFailed(BinoidError):
    """Colimit conditions still fail after stretching; this is a bug guard."""

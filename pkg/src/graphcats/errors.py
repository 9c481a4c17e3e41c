class GraphCatError(Exception):
    """Base class for every error raised by graphcats."""


class SizeError(GraphCatError):
    """A configured size cap would be exceeded."""


class DomainError(GraphCatError, ValueError):
    """An element lies outside the domain it was applied to."""


class KindError(GraphCatError, TypeError):
    """Input has the wrong structure kind, morphism kind, or shape."""


class PredicateError(KindError):
    """Input is of the right type but fails a subcategory predicate."""


class UnsupportedOperation(GraphCatError):
    """The operation deliberately has no morphism action."""

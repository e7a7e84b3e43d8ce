"""Exception types raised by bmres."""


class DimensionError(ValueError):
    """Monomials of different lengths were combined."""


class EmptyIdealError(ValueError):
    pass


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class CapacityError(ValueError):
    """Too many generators for the bitmask tables."""


class ArgumentError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line %d: %s" % (lineno, message)
        super().__init__(message)


class SchemaError(ValueError):
    """A serialized object does not have the expected layout."""


class MatchingError(RuntimeError):
    """A constructed matching failed validation. Indicates a bug."""


class InconsistencyError(RuntimeError):
    """Independent minimality signals disagree. Indicates a bug."""


class TheoremViolation(RuntimeError):
    """No ordering removes the bad gradient paths at some lattice point,
    although the ideal is within the scope where one must exist."""

"""Exception types shared across the package."""


class CumulantsError(Exception):
    """Base class for errors raised by this package."""


class InvalidFormError(CumulantsError):
    """A form violates a precondition, e.g. exp of a non-infinitesimal form."""


class IncompleteTableError(CumulantsError):
    """A word table is missing a required entry.

    Evaluation beyond the degrees a table provides is an error, never a
    silent zero.
    """

    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


class RouteDisagreementError(CumulantsError):
    """The shuffle route and the partition route disagree.

    Both routes compute the same quantity by independent means; a mismatch
    means an internal invariant is broken, not bad user input.
    """

    def __init__(self, message, word=None, values=()):
        super().__init__(message)
        self.word = word
        self.values = tuple(values)


class TableFormatError(CumulantsError):
    """A table document cannot be parsed."""

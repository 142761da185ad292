"""Exception hierarchy shared by all coincnet modules."""


class CoincnetError(ValueError):
    """Base class for data and domain errors raised by coincnet."""


class DimensionError(CoincnetError):
    """Vectors or matrices have incompatible shapes."""


class DomainError(CoincnetError):
    """A value lies outside the domain an operation is defined on."""


class IsolatedNodeError(DomainError):
    """A node has no links in the orientation being analysed."""

    def __init__(self, labels):
        self.labels = tuple(labels)
        shown = ", ".join(map(str, self.labels[:10]))
        more = "" if len(self.labels) <= 10 else f" (+{len(self.labels) - 10} more)"
        super().__init__(f"isolated node(s) with all-zero feature rows: {shown}{more}")


class FormatError(CoincnetError):
    """Input file or matrix does not follow the expected layout."""

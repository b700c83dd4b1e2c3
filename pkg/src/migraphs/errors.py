"""Exception types shared across the package."""


class MigraphsError(Exception):
    """Base class for all library-specific errors."""


class MonochromaticEdge(MigraphsError):
    """An edge joins two vertices of the same color."""


class InvalidFamily(MigraphsError):
    """An interval family violates its declared structural constraints."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid interval family: " + "; ".join(
            f"{code}[{label}]: {msg}" for code, label, msg in report.violations))


class LabelMismatch(MigraphsError):
    """Member labels do not line up with the expected graph's labels."""


class WrongBundleKind(MigraphsError):
    """A bundle was passed to an operation meant for a different reduction."""


class BadDistance(MigraphsError):
    """Distance parameter out of range for a distance-problem reduction."""


class EmptyColorClass(MigraphsError):
    """A reduction requires every color class / color pair to be nonempty."""


class TooFewVertices(MigraphsError):
    """Separation reductions need more vertices than the parameter bound."""


class BadSpec(MigraphsError):
    """An instance-generator specification is contradictory or unsatisfiable."""


class ParseError(MigraphsError):
    """A file could not be parsed; carries location context."""

    def __init__(self, path, detail):
        self.path = path
        self.detail = detail
        super().__init__(f"{path}: {detail}")

"""Exception hierarchy.

Every error raised by the library derives from :class:`BarycenterError`;
the CLI maps the subclasses onto exit codes.
"""


class BarycenterError(Exception):
    """Base class for all library errors."""


class InvalidInput(BarycenterError, ValueError):
    """Malformed or out-of-range user input."""


class RationalSyntaxError(InvalidInput):
    pass


class InvalidRho(InvalidInput):
    def __init__(self, r):
        super().__init__(f"rho/(4*pi) must be positive, got {r}")
        self.r = r


class InvalidAlpha(InvalidInput):
    def __init__(self, index, value):
        super().__init__(f"alpha_{index} = {value} is not in the open interval (-1, 0)")
        self.index = index
        self.value = value


class IndexOutOfRange(InvalidInput):
    pass


class EmptyLabel(InvalidInput):
    def __init__(self):
        super().__init__("the label (0, {}) carries no points")


class SizeLimit(BarycenterError):
    pass


class EmptySpace(BarycenterError):
    def __init__(self):
        super().__init__("the space of formal barycenters is empty for these parameters")


class SingularRho(BarycenterError):
    pass


class SingularRhoOthers(SingularRho):
    pass


class ThresholdOutOfRange(BarycenterError):
    """Raised when every weight in (-1, 0) is below the threshold.

    ``clamped`` carries the value the threshold is clamped to.
    """

    def __init__(self, gap, clamped=0):
        super().__init__(f"threshold gap {gap} leaves no upper bound inside (-1, 0)")
        self.gap = gap
        self.clamped = clamped

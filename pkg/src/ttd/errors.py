"""Exception types shared across the package."""


class TTDError(Exception):
    """Base class for all errors raised by ttd."""


class DegenerateInput(TTDError):
    pass


class NotASquare(TTDError):
    pass


class InvariantViolation(TTDError):
    """An identity that must hold by construction failed (a bug)."""


class Degeneracy(TTDError):
    def __init__(self, report):
        self.report = report
        super().__init__("degenerate moduli point: %s vanishes" % ", ".join(report.vanishing))


class Indeterminacy(TTDError):
    pass


class SharedSupport(TTDError):
    pass


class SameClass(TTDError):
    pass


class DegenerateAlgebra(TTDError):
    pass


class BadReduction(TTDError):
    pass


class BoundViolation(TTDError):
    pass


class UnsupportedDivisor(TTDError):
    pass


class InconclusiveLocalImage(TTDError):
    def __init__(self, place, partial):
        self.place = place
        self.partial = partial
        super().__init__("local image at %s did not saturate the order bound" % (place,))

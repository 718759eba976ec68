"""
Named errors raised across the toolkit.

Validation problems (bad moduli, arity, degenerate geometry) are ValueErrors so
callers can catch them the usual way; verification outcomes are RuntimeErrors
and are turned into check statuses by the suite runner.
"""


class ModulusError(ValueError):
    """Field modulus has the wrong degree or is reducible."""


class DivisionByZero(ZeroDivisionError):
    """Inverse of the zero field element was requested."""


class SpecMismatch(ValueError):
    """Operands live in different fields."""


class ArityMismatch(ValueError):
    """Variable counts or coordinate counts disagree."""


class GeometryError(ValueError):
    """Degenerate projective construction (equal points, collinear points, proportional planes)."""


class GenericityError(ValueError):
    """Parameters violate a genericity condition."""


class DegeneratePolar(ValueError):
    """Polar of a form at a point vanishes identically."""


class NotALine(ValueError):
    """Point of P^5 off the Grassmannian quadric."""


class DegenerateF2(ValueError):
    """Quadric is zero or has a vanishing polar form."""


class NonExactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class ResampleRequired(Exception):
    """Sample hit a degenerate locus; draw another one."""


class VerificationFailure(RuntimeError):
    """A claim checked by the toolkit did not hold."""


class CapExceeded(RuntimeError):
    """Enumeration grew past its configured cap."""


class InconclusiveSample(RuntimeError):
    """Random search did not produce a usable instance."""


class CheckSkipped(Exception):
    """A check cannot run with the requested options (field too large, budget spent)."""

"""Exception types shared across the package.

Plain ``ValueError`` is used for argument-domain violations; the classes here
cover the two failure modes that need their own handling at the CLI boundary.
"""


class PoleError(ZeroDivisionError):
    """An evaluation point sits on a pole of the requested function.

    Raised by the elliptic ratio functions when the denominator function
    vanishes, and by the strip-map coordinate z(y) on the strip boundary
    y = 0 or y = pi.  Callers at the boundary should substitute the exact
    limiting values instead of evaluating.
    """


class ConvergenceError(RuntimeError):
    """An iterative scheme (bisection, quadrature, bracket search) failed
    to reach its tolerance within the allotted work."""

"""Exception hierarchy.

Domain errors are violated mathematical preconditions (even modulus for a
dihedral quandle, a cochain that is not a cocycle, ...).  Structural errors
are malformed inputs: wrong table shapes, dangling sheet references, bad
file syntax.  The CLI maps the first family to exit code 1 and the second
to exit code 2.
"""


class QuandleLabError(Exception):
    pass


class DomainError(QuandleLabError, ValueError):
    pass


class StructuralError(QuandleLabError, ValueError):
    pass


class ComputationError(QuandleLabError, RuntimeError):
    pass


class BasisLimitError(DomainError):
    """Raised when a chain group would exceed the configured basis size."""

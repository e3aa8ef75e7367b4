"""Exception types shared across the package.

Every one of these signals a broken internal assumption, not bad user
input: if any of them fires during a computation the result would have
been meaningless, so callers generally let them propagate.
"""


class NotRationalInteger(Exception):
    """A value that must be a plain integer has a zeta-part or a denominator."""


class StructureMismatch(Exception):
    """A finite group came out with the wrong order or failed a membership check."""


class UnrepresentableRoot(Exception):
    """An eigenvalue would lie outside Q(zeta_9)."""


class FormulaViolation(Exception):
    """A closed-form multiplicity formula produced an impossible intermediate."""


class PreconditionViolated(Exception):
    """An operation was called outside its stated domain."""


class ScaleExceeded(Exception):
    """A brute-force computation was requested beyond the configured caps."""


class NegativeRemainder(Exception):
    """Character subtraction went negative: the table was not a genuine character."""


class NegativeCoefficient(Exception):
    """Series deconvolution produced a negative coefficient."""

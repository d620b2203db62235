"""Exception hierarchy.

``PreconditionError`` marks inputs that violate a documented precondition;
the command-line driver maps it to exit code 2.  Everything else escaping
the library is treated as an internal error.
"""


class PreconditionError(ValueError):
    """Input violates a documented precondition."""


class FieldError(PreconditionError):
    pass


class NotInvertible(ArithmeticError):
    """Element shares a factor with the modulus."""


class InseparableInput(PreconditionError):
    pass


class HenselFailure(PreconditionError):
    """Seed does not isolate a unique root."""


class PrecisionError(ArithmeticError):
    """Internal precision bookkeeping came up short."""


class RationalInput(PreconditionError):
    pass


class InsufficientData(PreconditionError):
    pass


class IndistinguishableAtPrecision(PreconditionError):
    pass


class ZeroDenominator(PreconditionError):
    pass


class WrongShape(PreconditionError):
    pass


class SpecViolation(PreconditionError):
    pass


class NotSquarefree(PreconditionError):
    pass


class Singular(PreconditionError):
    pass


class NotEtale(PreconditionError):
    pass


class DomainError(PreconditionError):
    pass

"""Exception hierarchy shared by every module of the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class DimensionError(DomainError):
    """Matrix or tuple shapes do not fit together."""


class InversionError(DomainError, ArithmeticError):
    """A series or ring element whose constant term is not a unit was inverted."""


class DegenerateSystemError(DomainError):
    """The basis of a linear system is linearly dependent."""


class ConfigMismatchError(DomainError):
    """A linear system does not ramify as a configuration claims."""


class DegenerateConfigurationError(DomainError):
    """A formula hit a vanishing denominator or colliding points."""


class SingularPointError(DomainError):
    """A Taylor expansion was requested at a zero of some Wronskian."""

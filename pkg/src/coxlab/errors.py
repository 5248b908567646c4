"""Exception types shared across the package."""


class CoxlabError(Exception):
    """Base class. The CLI prints ``ClassName: detail`` and exits with code 1."""


class ArgumentError(CoxlabError, ValueError):
    pass


class DivisionError(CoxlabError, ArithmeticError):
    pass


class NotUnimodularError(CoxlabError, ArithmeticError):
    pass


class InvalidAlgebraError(CoxlabError, ValueError):
    pass


class NotRepresentableError(CoxlabError, ValueError):
    pass


class InconsistentExtensionError(CoxlabError, ArithmeticError):
    pass


class NumericError(CoxlabError, ArithmeticError):
    pass

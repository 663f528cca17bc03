"""Exception types shared across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class ParseError(ValueError):
    pass


class RankMismatch(ValueError):
    pass


class ZeroVector(ValueError):
    """A dimension vector with no positive entry was given where S is required."""


class NonGeneric(ArithmeticError):
    """A strict comparison was requested on an exactly degenerate value."""


class NotGeneric(ValueError):
    """A central charge fails the genericity scan at the requested bound."""


class NotSupportedGe2(ValueError):
    pass


class NotUnital(ValueError):
    pass


class NotLyndon(ValueError):
    pass

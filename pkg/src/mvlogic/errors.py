from __future__ import annotations


class MvLogicError(Exception):
    """Base class for every error raised by mvlogic."""


class AlphabetError(MvLogicError):
    pass


class AlphabetMismatchError(MvLogicError):
    pass


class InvalidDigitError(MvLogicError):
    def __init__(self, digit: int, radix: int):
        super().__init__(f'digit {digit} is outside [0, {radix})')
        self.digit = digit
        self.radix = radix


class AddressOutOfRangeError(MvLogicError):
    def __init__(self, address: int, size: int):
        super().__init__(f'address {address} is outside [0, {size})')
        self.address = address
        self.size = size


class LengthMismatchError(MvLogicError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f'expected {expected} values, got {actual}')
        self.expected = expected
        self.actual = actual


class UnknownSymbolError(MvLogicError):
    def __init__(self, symbol: str):
        super().__init__(f'unknown symbol {symbol!r}')
        self.symbol = symbol


class ArityMismatchError(MvLogicError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f'expected a {expected}-tuple, got {actual} values')
        self.expected = expected
        self.actual = actual


class CompositionSpecError(MvLogicError):
    pass


class ResourceLimitError(MvLogicError):
    def __init__(self, radix: int, arity: int, budget: int):
        super().__init__(f'{radix}^{arity} cells exceed the budget of {budget}')
        self.radix = radix
        self.arity = arity
        self.budget = budget


class InconsistentError(MvLogicError):
    """Two argument tuples reach one z-tuple but demand different values."""

    def __init__(self, x1: int, x2: int, z: int):
        super().__init__(
            f'argument addresses {x1} and {x2} both map to z-address {z} '
            'but require different values'
        )
        self.x1 = x1
        self.x2 = x2
        self.z = z


class ParseError(MvLogicError):
    def __init__(self, line: int, reason: str):
        super().__init__(f'line {line}: {reason}')
        self.line = line
        self.reason = reason


class UnsupportedRadixError(MvLogicError):
    pass


class TableIOError(MvLogicError):
    pass


class FormatError(MvLogicError):
    pass


class TruncatedPayloadError(MvLogicError):
    pass

"""Alphabets, argument tuples, mixed-radix addressing and dense truth tables.

A table over an alphabet of r symbols and arity n stores r^n value-indices. Position k
holds the value for the argument tuple whose address is k, where the first variable is
the most significant digit.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator, Sequence
from typing import Self

from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from mvlogic.errors import (
    AddressOutOfRangeError,
    AlphabetError,
    AlphabetMismatchError,
    ArityMismatchError,
    InvalidDigitError,
    LengthMismatchError,
    MvLogicError,
    UnknownSymbolError,
)


# A tuple of value-indices, each in [0, r). Also used for z-tuples.
ArgTuple = tuple[int, ...]
# Exact solution and function counts; Python ints never overflow.
SolutionCount = int

_SEPARATORS = re.compile(r'[\s,]+')


class Alphabet(BaseModel):
    """Ordered set of r >= 2 distinct symbols."""

    model_config = ConfigDict(frozen=True)

    symbols: tuple[str, ...]

    _index: dict[str, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode='after')
    def _check_symbols(self) -> Self:
        if len(self.symbols) < 2:
            raise AlphabetError(f'an alphabet needs at least 2 symbols, got {len(self.symbols)}')
        for symbol in self.symbols:
            if not symbol or any(ch.isspace() or ch == '\0' for ch in symbol):
                raise AlphabetError(f'invalid symbol {symbol!r}')
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f'duplicate symbols in {list(self.symbols)}')
        return self

    def model_post_init(self, __context) -> None:
        self._index = {symbol: i for i, symbol in enumerate(self.symbols)}

    @classmethod
    def of(cls, *symbols: str) -> Alphabet:
        return cls(symbols=symbols)

    @classmethod
    def parse(cls, text: str) -> Alphabet:
        """Build an alphabet from symbols separated by commas and/or whitespace."""
        return cls(symbols=tuple(s for s in _SEPARATORS.split(text.strip()) if s))

    @property
    def radix(self) -> int:
        return len(self.symbols)

    def index_of(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownSymbolError(symbol) from None

    def symbol_at(self, index: int) -> str:
        if not 0 <= index < self.radix:
            raise InvalidDigitError(index, self.radix)
        return self.symbols[index]

    def encode(self, symbols: Iterable[str]) -> ArgTuple:
        return tuple(self.index_of(s) for s in symbols)

    def decode(self, digits: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.symbol_at(d) for d in digits)

    def __str__(self) -> str:
        return '{' + ', '.join(self.symbols) + '}'


def address(t: Sequence[int], r: int) -> int:
    """Mixed-radix address of an argument tuple, first variable most significant."""
    k = 0
    for digit in t:
        if not 0 <= digit < r:
            raise InvalidDigitError(digit, r)
        k = k * r + digit
    return k


def tuple_from_address(k: int, r: int, n: int) -> ArgTuple:
    size = r**n
    if not 0 <= k < size:
        raise AddressOutOfRangeError(k, size)
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        k, digits[i] = divmod(k, r)
    return tuple(digits)


def all_tuples(r: int, n: int) -> Iterator[ArgTuple]:
    """Every argument tuple in ascending address order."""
    return itertools.product(range(r), repeat=n)


def count_functions(r: int, n: int) -> SolutionCount:
    if r < 2:
        raise AlphabetError(f'radix must be at least 2, got {r}')
    if n < 0:
        raise MvLogicError(f'arity must be nonnegative, got {n}')
    return r ** (r**n)


class TruthTable(BaseModel):
    """An r-valued logic function of n variables, stored densely in address order."""

    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    arity: int
    values: tuple[int, ...]

    @model_validator(mode='after')
    def _check_values(self) -> Self:
        if self.arity < 0:
            raise MvLogicError(f'arity must be nonnegative, got {self.arity}')
        expected = self.alphabet.radix**self.arity
        if len(self.values) != expected:
            raise LengthMismatchError(expected, len(self.values))
        r = self.alphabet.radix
        for v in self.values:
            if not 0 <= v < r:
                raise InvalidDigitError(v, r)
        return self

    @property
    def radix(self) -> int:
        return self.alphabet.radix

    @property
    def size(self) -> int:
        return len(self.values)

    def value_at(self, k: int) -> int:
        if not 0 <= k < self.size:
            raise AddressOutOfRangeError(k, self.size)
        return self.values[k]

    def symbols(self) -> list[str]:
        return [self.alphabet.symbols[v] for v in self.values]

    def evaluate_symbols(self, *symbols: str) -> str:
        if len(symbols) != self.arity:
            raise ArityMismatchError(self.arity, len(symbols))
        return self.alphabet.symbols[self.values[address(self.alphabet.encode(symbols), self.radix)]]

    def relabel(self, alphabet: Alphabet) -> TruthTable:
        """Re-express this table over another ordering of the same symbol set.

        Argument tuples and values are matched by symbol name, so the result denotes the
        same function but its value vector follows the new alphabet's addressing.
        """
        if set(alphabet.symbols) != set(self.alphabet.symbols):
            raise AlphabetMismatchError(f'cannot align {self.alphabet} with {alphabet}')
        if alphabet == self.alphabet:
            return self
        r, n = self.radix, self.arity
        old_digit = [self.alphabet.index_of(s) for s in alphabet.symbols]
        values = []
        for t in all_tuples(r, n):
            old_value = self.values[address([old_digit[d] for d in t], r)]
            values.append(alphabet.index_of(self.alphabet.symbols[old_value]))
        return TruthTable(alphabet=alphabet, arity=n, values=tuple(values))


def make_table(alphabet: Alphabet, arity: int, values: Sequence[str]) -> TruthTable:
    expected = alphabet.radix**arity
    if len(values) != expected:
        raise LengthMismatchError(expected, len(values))
    return TruthTable(alphabet=alphabet, arity=arity, values=alphabet.encode(values))


def constant_table(alphabet: Alphabet, arity: int, symbol: str) -> TruthTable:
    v = alphabet.index_of(symbol)
    return TruthTable(alphabet=alphabet, arity=arity, values=(v,) * alphabet.radix**arity)


def projection_table(alphabet: Alphabet, arity: int, k: int) -> TruthTable:
    """The table returning its k-th argument (1-based)."""
    if not 1 <= k <= arity:
        raise MvLogicError(f'projection index {k} is outside 1..{arity}')
    return TruthTable(
        alphabet=alphabet,
        arity=arity,
        values=tuple(t[k - 1] for t in all_tuples(alphabet.radix, arity)),
    )


def enumerate_tables(alphabet: Alphabet, arity: int) -> Iterator[TruthTable]:
    """Every table of the given arity, in ascending value-vector order."""
    for values in itertools.product(range(alphabet.radix), repeat=alphabet.radix**arity):
        yield TruthTable(alphabet=alphabet, arity=arity, values=values)

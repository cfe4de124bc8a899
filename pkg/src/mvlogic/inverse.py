"""Reverse tasks of composition.

Task 1 recovers the transforming function g from the argument functions and the
result y. Task 2 recovers some of the argument functions from g, y and the remaining
known arguments. Both decompose pointwise over the argument addresses, so solutions
are counted exactly and enumerated without search.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator, Mapping, Sequence
from typing import Self

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from mvlogic.composer import check_budget, z_addresses
from mvlogic.errors import (
    AlphabetMismatchError,
    ArityMismatchError,
    CompositionSpecError,
    InconsistentError,
    InvalidDigitError,
    LengthMismatchError,
)
from mvlogic.mvcore import Alphabet, ArgTuple, SolutionCount, TruthTable, address
from mvlogic.tracing import traced


logger = logging.getLogger('mvlogic.inverse')


class PartialTable(BaseModel):
    """A table of arity m whose cells are either bound to a value-index or free (None)."""

    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    arity: int
    cells: tuple[int | None, ...]

    @model_validator(mode='after')
    def _check_cells(self) -> Self:
        expected = self.alphabet.radix**self.arity
        if len(self.cells) != expected:
            raise LengthMismatchError(expected, len(self.cells))
        for cell in self.cells:
            if cell is not None and not 0 <= cell < self.alphabet.radix:
                raise InvalidDigitError(cell, self.alphabet.radix)
        return self

    def bound_addresses(self) -> list[int]:
        return [k for k, cell in enumerate(self.cells) if cell is not None]

    def free_addresses(self) -> list[int]:
        return [k for k, cell in enumerate(self.cells) if cell is None]

    def complete(self, choice: Sequence[int]) -> TruthTable:
        """Fill the free cells, in ascending address order, with the given value-indices."""
        free = self.free_addresses()
        if len(choice) != len(free):
            raise LengthMismatchError(len(free), len(choice))
        values = list(self.cells)
        for k, v in zip(free, choice, strict=True):
            values[k] = v
        return TruthTable(alphabet=self.alphabet, arity=self.arity, values=tuple(values))  # type: ignore[arg-type]


class GSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    partial: PartialTable

    @computed_field  # type: ignore[prop-decorator]
    @property
    def bound_count(self) -> int:
        return len(self.partial.cells) - self.free_count

    @computed_field  # type: ignore[prop-decorator]
    @property
    def free_count(self) -> int:
        return self.partial.cells.count(None)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def solution_count(self) -> SolutionCount:
        return self.partial.alphabet.radix**self.free_count


class FSolutionSpace(BaseModel):
    """Per-address admissible value tuples for the unknown argument positions."""

    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    arity: int
    # 1-based positions of g's arguments being solved for, ascending
    unknown: tuple[int, ...]
    # admissible[x] lists, ascending, the value tuples over `unknown` allowed at address x
    admissible: tuple[tuple[ArgTuple, ...], ...]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def solution_count(self) -> SolutionCount:
        return math.prod(len(choices) for choices in self.admissible)


def _check_alphabets(alphabet: Alphabet, tables: Sequence[TruthTable]) -> None:
    for f in tables:
        if f.alphabet != alphabet:
            raise AlphabetMismatchError(f'{f.alphabet} differs from {alphabet}')


@traced(type='function')
def solve_for_g(
    args: Sequence[TruthTable], y: TruthTable, *, cell_budget: int | None = None
) -> GSolution:
    if not args:
        raise CompositionSpecError('at least one argument function is required')
    _check_alphabets(y.alphabet, args)
    for f in args:
        if f.arity != y.arity:
            raise ArityMismatchError(y.arity, f.arity)
    r, m = y.radix, len(args)
    check_budget(r, y.arity, cell_budget)
    check_budget(r, m, cell_budget)

    cells: list[int | None] = [None] * r**m
    witness: dict[int, int] = {}
    for x, z in enumerate(z_addresses(args, r)):
        value = y.values[x]
        if cells[z] is None:
            cells[z] = value
            witness[z] = x
        elif cells[z] != value:
            raise InconsistentError(witness[z], x, z)

    solution = GSolution(partial=PartialTable(alphabet=y.alphabet, arity=m, cells=tuple(cells)))
    logger.debug(f'g has {solution.bound_count} bound and {solution.free_count} free cells')
    return solution


def enumerate_g_solutions(sol: GSolution, limit: int | None = None) -> Iterator[TruthTable]:
    """Yield completions in ascending order of the free-cell values, first free cell most significant."""
    choices = itertools.product(range(sol.partial.alphabet.radix), repeat=sol.free_count)
    for choice in itertools.islice(choices, limit):
        yield sol.partial.complete(choice)


@traced(type='function')
def solve_for_f(
    g: TruthTable,
    y: TruthTable,
    known: Mapping[int, TruthTable],
    *,
    cell_budget: int | None = None,
) -> FSolutionSpace:
    """Admissible values of the unknown argument functions at every argument address.

    Positions are 1-based. Every position of g absent from `known` is solved for.
    """
    m, n, r = g.arity, y.arity, g.radix
    if m == 0:
        raise CompositionSpecError('the transforming function must take at least one argument')
    _check_alphabets(g.alphabet, [y, *known.values()])
    for k, f in known.items():
        if not 1 <= k <= m:
            raise CompositionSpecError(f'position {k} is outside 1..{m}')
        if f.arity != n:
            raise ArityMismatchError(n, f.arity)
    check_budget(r, n, cell_budget)

    unknown = tuple(k for k in range(1, m + 1) if k not in known)
    known_items = sorted(known.items())
    admissible: list[tuple[ArgTuple, ...]] = []
    for x in range(r**n):
        z = [0] * m
        for k, f in known_items:
            z[k - 1] = f.values[x]
        target = y.values[x]
        allowed = []
        for candidate in itertools.product(range(r), repeat=len(unknown)):
            for k, v in zip(unknown, candidate, strict=True):
                z[k - 1] = v
            if g.values[address(z, r)] == target:
                allowed.append(candidate)
        admissible.append(tuple(allowed))

    space = FSolutionSpace(
        alphabet=g.alphabet, arity=n, unknown=unknown, admissible=tuple(admissible)
    )
    logger.debug(f'Unknown positions {list(unknown)}: {space.solution_count} solutions')
    return space


def count_f_solutions(space: FSolutionSpace) -> SolutionCount:
    return space.solution_count


def enumerate_f_solutions(
    space: FSolutionSpace, limit: int | None = None
) -> Iterator[dict[int, TruthTable]]:
    """Yield {position: table} assignments in ascending order of the per-address choices.

    The choice at address 0 is the most significant. With no unknown positions the
    single solution is the empty assignment.
    """
    for choice in itertools.islice(itertools.product(*space.admissible), limit):
        yield {
            k: TruthTable(
                alphabet=space.alphabet,
                arity=space.arity,
                values=tuple(values[j] for values in choice),
            )
            for j, k in enumerate(space.unknown)
        }

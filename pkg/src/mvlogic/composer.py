from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator

from mvlogic.config import get_settings
from mvlogic.errors import ArityMismatchError, CompositionSpecError, ResourceLimitError
from mvlogic.mvcore import ArgTuple, TruthTable, address
from mvlogic.tracing import traced


logger = logging.getLogger('mvlogic.composer')


class CompositionSpec(BaseModel):
    """y(x) = g(f_1(x), ..., f_m(x)) with g of arity m and every f_k of arity n."""

    model_config = ConfigDict(frozen=True)

    g: TruthTable
    args: tuple[TruthTable, ...]

    @model_validator(mode='after')
    def _check_shapes(self) -> Self:
        m = self.g.arity
        if m == 0:
            raise CompositionSpecError('the transforming function must take at least one argument')
        if len(self.args) != m:
            raise CompositionSpecError(f'g takes {m} arguments but {len(self.args)} were given')
        for k, f in enumerate(self.args, start=1):
            if f.alphabet != self.g.alphabet:
                raise CompositionSpecError(
                    f'f_{k} is over {f.alphabet}, g is over {self.g.alphabet}'
                )
        arities = {f.arity for f in self.args}
        if len(arities) != 1:
            raise CompositionSpecError(f'argument functions have mixed arities {sorted(arities)}')
        return self

    @property
    def arity(self) -> int:
        return self.args[0].arity


def check_budget(r: int, n: int, cell_budget: int | None = None) -> int:
    """Return r^n, refusing sizes over the configured cell budget."""
    budget = cell_budget if cell_budget is not None else get_settings().cell_budget
    # r >= 2, so r^n >= 2^n: huge headers are refused before exponentiating
    if r >= 2 and n > budget.bit_length():
        raise ResourceLimitError(r, n, budget)
    cells = r**n
    if cells > budget:
        raise ResourceLimitError(r, n, budget)
    return cells


def evaluate(f: TruthTable, t: ArgTuple) -> int:
    """Two-step evaluation: form the address of t, then read the value stored there."""
    if len(t) != f.arity:
        raise ArityMismatchError(f.arity, len(t))
    return f.values[address(t, f.radix)]


def z_addresses(args: Sequence[TruthTable], r: int) -> list[int]:
    """For every argument address x, the address of the z-tuple (f_1(x), ..., f_m(x))."""
    addresses = [0] * args[0].size
    for f in args:
        addresses = [z * r + v for z, v in zip(addresses, f.values, strict=True)]
    return addresses


@traced(type='function')
def compose(spec: CompositionSpec, *, cell_budget: int | None = None) -> TruthTable:
    r, n = spec.g.radix, spec.arity
    cells = check_budget(r, n, cell_budget)
    logger.debug(f'Composing g of arity {spec.g.arity} over {cells} argument tuples')
    g_values = spec.g.values
    values = tuple(g_values[z] for z in z_addresses(spec.args, r))
    return TruthTable(alphabet=spec.g.alphabet, arity=n, values=values)


def compose_functions(
    g: TruthTable, args: Sequence[TruthTable], *, cell_budget: int | None = None
) -> TruthTable:
    return compose(CompositionSpec(g=g, args=tuple(args)), cell_budget=cell_budget)

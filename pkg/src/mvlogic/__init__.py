from __future__ import annotations

from .cli import run_cli
from .composer import CompositionSpec, compose, compose_functions, evaluate
from .inverse import (
    FSolutionSpace,
    GSolution,
    PartialTable,
    count_f_solutions,
    enumerate_f_solutions,
    enumerate_g_solutions,
    solve_for_f,
    solve_for_g,
)
from .mvcore import (
    Alphabet,
    TruthTable,
    address,
    count_functions,
    make_table,
    tuple_from_address,
)


__all__ = [
    'Alphabet',
    'CompositionSpec',
    'FSolutionSpace',
    'GSolution',
    'PartialTable',
    'TruthTable',
    'address',
    'compose',
    'compose_functions',
    'count_f_solutions',
    'count_functions',
    'enumerate_f_solutions',
    'enumerate_g_solutions',
    'evaluate',
    'make_table',
    'run_cli',
    'solve_for_f',
    'solve_for_g',
    'tuple_from_address',
]

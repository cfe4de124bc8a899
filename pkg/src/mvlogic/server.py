"""MCP tools over the truth-table library.

Tables travel as text documents (see mvlogic.tablestore). Errors are reported in the
returned text rather than raised, so a client always gets a readable answer.
"""

import logging
import sys
from collections.abc import Callable
from typing import Annotated

from fastmcp import FastMCP

from mvlogic.composer import compose_functions, evaluate
from mvlogic.config import get_settings
from mvlogic.errors import InconsistentError, MvLogicError
from mvlogic.formatting import format_assignment, format_bound_cells, format_space_summary
from mvlogic.inverse import enumerate_f_solutions, solve_for_f, solve_for_g
from mvlogic.mvcore import count_functions
from mvlogic.tablestore import emit_text, parse_text


logger = logging.getLogger('mvlogic.server')

# exact counts are returned in full
sys.set_int_max_str_digits(0)

TableDocument = Annotated[str, 'a table in mvlf text form: mvlf 1 / radix r arity n / symbols / values']


def _guarded(action: Callable[[], str]) -> str:
    try:
        return action()
    except InconsistentError as e:
        return f'Inconsistent: {e}'
    except MvLogicError as e:
        logger.error(f'Tool execution failed: {e!s}')
        return f'Error: {e!s}'


def evaluate_table(table: TableDocument, arguments: Annotated[list[str], 'argument symbols']) -> str:
    """Return the value of the table at the given argument tuple."""

    def run() -> str:
        f = parse_text(table)
        return f.alphabet.symbols[evaluate(f, f.alphabet.encode(arguments))]

    return _guarded(run)


def compose_tables(
    g: TableDocument, args: Annotated[list[str], 'argument function documents f_1 ... f_m']
) -> str:
    """Compose y(x) = g(f_1(x), ..., f_m(x)) and return y as a text document."""
    return _guarded(lambda: emit_text(compose_functions(parse_text(g), [parse_text(a) for a in args])))


def count_logic_functions(radix: int, arity: int) -> str:
    """Return the number of radix-valued functions of the given arity."""
    return _guarded(lambda: str(count_functions(radix, arity)))


def count_g_solutions(args: list[str], y: TableDocument) -> str:
    """Recover g from f_1 ... f_m and y: bound cells and the exact number of solutions."""

    def run() -> str:
        sol = solve_for_g([parse_text(a) for a in args], parse_text(y))
        return (
            f'bound: {format_bound_cells(sol)}\n'
            f'free cells: {sol.free_count}\nsolutions: {sol.solution_count}'
        )

    return _guarded(run)


def solve_f_tables(
    g: TableDocument,
    y: TableDocument,
    known: Annotated[dict[int, str], '1-based position -> known argument document'],
    limit: Annotated[int | None, 'number of solutions to list'] = None,
) -> str:
    """Recover the argument functions of g missing from `known` and list some solutions."""

    def run() -> str:
        space = solve_for_f(parse_text(g), parse_text(y), {k: parse_text(d) for k, d in known.items()})
        if space.solution_count == 0:
            return 'no solution'
        n = limit if limit is not None else get_settings().enumerate_limit
        listed = [format_assignment(a) for a in enumerate_f_solutions(space, n)]
        return '\n\n'.join([format_space_summary(space), *listed])

    return _guarded(run)


mcp = FastMCP('mvlogic')

for tool in (
    evaluate_table,
    compose_tables,
    count_logic_functions,
    count_g_solutions,
    solve_f_tables,
):
    mcp.tool(tool)

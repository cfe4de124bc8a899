from __future__ import annotations

from mvlogic.inverse import FSolutionSpace, GSolution
from mvlogic.mvcore import TruthTable, all_tuples


FREE_MARK = '*'


def format_truth_grid(f: TruthTable, variable: str = 'X', result: str = 'y') -> str:
    """Format a table as address, argument columns and value, one row per address."""
    header = ['\\', *(f'{variable}{i}' for i in range(1, f.arity + 1)), result]
    rows = [header]
    for k, t in enumerate(all_tuples(f.radix, f.arity)):
        rows.append([str(k), *f.alphabet.decode(t), f.alphabet.symbols[f.values[k]]])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return '\n'.join(
        '  '.join(cell.ljust(width) for cell, width in zip(row, widths, strict=True)).rstrip()
        for row in rows
    )


def format_partial(sol: GSolution) -> str:
    """Format the bound/free cell map of a task-1 solution.

    One line per cell: address, z-tuple, then the bound symbol or '*' when free.
    """
    partial = sol.partial
    alphabet = partial.alphabet
    lines = []
    for k, z in enumerate(all_tuples(alphabet.radix, partial.arity)):
        cell = partial.cells[k]
        value = FREE_MARK if cell is None else alphabet.symbols[cell]
        lines.append(f'{k} {" ".join(alphabet.decode(z))} {value}')
    lines.append(f'bound {sol.bound_count} free {sol.free_count}')
    return '\n'.join(lines)


def format_bound_cells(sol: GSolution) -> str:
    symbols = sol.partial.alphabet.symbols
    return ' '.join(f'{k}:{symbols[sol.partial.cells[k]]}' for k in sol.partial.bound_addresses())  # type: ignore[index]


def format_assignment(assignment: dict[int, TruthTable]) -> str:
    if not assignment:
        return '(all positions known)'
    return '\n'.join(
        f'f{k} ~ [{" ".join(f.symbols())}]' for k, f in sorted(assignment.items())
    )


def format_space_summary(space: FSolutionSpace) -> str:
    positions = ', '.join(f'f{k}' for k in space.unknown) or 'none'
    sizes = ' '.join(str(len(choices)) for choices in space.admissible)
    return f'unknown: {positions}\nadmissible set sizes: {sizes}\nsolutions: {space.solution_count}'

import logging
import sys
from pathlib import Path
from typing import Annotated, NoReturn

import stackprinter  # type: ignore
import typer
from pydantic import ValidationError
from returns.pipeline import is_successful

from mvlogic.composer import compose_functions, evaluate
from mvlogic.config import get_settings
from mvlogic.errors import InconsistentError, MvLogicError
from mvlogic.formatting import format_assignment, format_partial, format_truth_grid
from mvlogic.inverse import (
    count_f_solutions,
    enumerate_f_solutions,
    enumerate_g_solutions,
    solve_for_f,
    solve_for_g,
)
from mvlogic.mvcore import Alphabet, TruthTable, count_functions
from mvlogic.tablestore import (
    StoredTable,
    TableFormat,
    VectorOrder,
    load_table_safe,
    load_tables_safe,
    save_table,
)


logger = logging.getLogger('mvlogic')

# exact counts are printed in full
sys.set_int_max_str_digits(0)

EXIT_USAGE = 2
EXIT_INCONSISTENT = 3

app = typer.Typer(
    no_args_is_help=True,
    add_completion=False,
    help='Evaluate, compose and invert many-valued logic functions given as truth tables.',
)

FormatOption = Annotated[
    TableFormat, typer.Option('--format', help='format of written tables')
]
OutDirOption = Annotated[
    Path, typer.Option('--out-dir', help='directory for enumerated solution files')
]
CountOption = Annotated[bool, typer.Option('--count', help='print the exact number of solutions')]
EnumerateOption = Annotated[
    int | None,
    typer.Option('--enumerate', min=0, help='write up to N solutions as numbered files'),
]


@app.callback()
def main(
    verbose: Annotated[bool, typer.Option('--verbose', '-v', help='log at DEBUG level')] = False,
):
    try:
        settings = get_settings()
    except ValidationError as e:
        error = e.errors()[0]
        _fail(f'invalid setting {error["loc"][0]}: {error["msg"]}')
    level = logging.DEBUG if verbose else settings.log_level
    logging.basicConfig(
        level=level, format='%(levelname)s %(name)s: %(message)s', force=True
    )


def _fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    typer.echo(f'error: {message}', err=True)
    raise typer.Exit(code)


def _load(path: Path) -> TruthTable:
    result = load_table_safe(path)
    if not is_successful(result):
        _fail(f'{path}: {result.failure()}')
    return result.unwrap()


def _load_all(paths: list[Path]) -> list[TruthTable]:
    result = load_tables_safe(paths)
    if not is_successful(result):
        _fail(str(result.failure()))
    return result.unwrap()


def _make_out_dir(out_dir: Path) -> None:
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        _fail(f'--out-dir {out_dir}: {e.strerror or e}')


def _save(f: TruthTable, path: Path, fmt: TableFormat) -> None:
    try:
        save_table(f, path, fmt)
    except MvLogicError as e:
        _fail(str(e))


def _solution_path(out_dir: Path, index: int, fmt: TableFormat, suffix: str = '') -> Path:
    extension = 'atlf' if fmt is TableFormat.BINARY else 'mvlf'
    return out_dir / f'sol-{index:06d}{suffix}.{extension}'


@app.command('eval')
def eval_cmd(
    table: Annotated[Path, typer.Argument(help='table file')],
    symbols: Annotated[list[str] | None, typer.Argument(help='argument tuple')] = None,
    stored: Annotated[
        bool, typer.Option('--stored', help='read one payload byte from a binary table')
    ] = False,
):
    """Print the value of a table at an argument tuple."""
    symbols = symbols or []
    try:
        if stored:
            with StoredTable.open(table) as s:
                value = s.evaluate(s.alphabet.encode(symbols))
                typer.echo(s.alphabet.symbols[value])
            return
        f = _load(table)
        typer.echo(f.alphabet.symbols[evaluate(f, f.alphabet.encode(symbols))])
    except MvLogicError as e:
        _fail(str(e))


@app.command('compose')
def compose_cmd(
    g_path: Annotated[Path, typer.Argument(help='transforming function g')],
    f_paths: Annotated[list[Path], typer.Argument(help='argument functions f_1 ... f_m')],
    out: Annotated[Path, typer.Argument(help='where to write the resultant table')],
    fmt: FormatOption = TableFormat.TEXT,
):
    """Write y(x) = g(f_1(x), ..., f_m(x))."""
    g = _load(g_path)
    args = _load_all(f_paths)
    try:
        y = compose_functions(g, args)
        save_table(y, out, fmt)
    except MvLogicError as e:
        _fail(str(e))
    logger.info(f'Wrote {y.size} cells to {out}')


@app.command('solve-g')
def solve_g_cmd(
    f_paths: Annotated[list[Path], typer.Argument(help='argument functions f_1 ... f_m')],
    y_path: Annotated[Path, typer.Argument(help='resultant function y')],
    count: CountOption = False,
    enumerate_: EnumerateOption = None,
    partial: Annotated[bool, typer.Option('--partial', help='print the bound/free cell map')] = False,
    out_dir: OutDirOption = Path(),
    fmt: FormatOption = TableFormat.TEXT,
):
    """Recover the transforming function g from f_1 ... f_m and y."""
    args = _load_all(f_paths)
    y = _load(y_path)
    try:
        sol = solve_for_g(args, y)
    except InconsistentError as e:
        _fail(f'inconsistent: {e}', EXIT_INCONSISTENT)
    except MvLogicError as e:
        _fail(str(e))

    if partial:
        typer.echo(format_partial(sol))
    if count or not (partial or enumerate_ is not None):
        typer.echo(str(sol.solution_count))
    if enumerate_ is not None:
        _make_out_dir(out_dir)
        written = 0
        for written, g in enumerate(enumerate_g_solutions(sol, enumerate_), start=1):
            _save(g, _solution_path(out_dir, written, fmt), fmt)
        typer.echo(f'wrote {written} solutions to {out_dir}')


def _parse_positions(
    known: list[str], unknown: list[int], m: int
) -> dict[int, Path]:
    known_paths: dict[int, Path] = {}
    for item in known:
        position, sep, path = item.partition('=')
        if not sep or not position.strip().isdigit() or not path:
            _fail(f'--known expects k=path, got {item!r}')
        k = int(position)
        if k in known_paths:
            _fail(f'position {k} is given twice')
        known_paths[k] = Path(path)
    positions = set(range(1, m + 1))
    if not set(known_paths) <= positions:
        _fail(f'known positions {sorted(set(known_paths) - positions)} are outside 1..{m}')
    if len(set(unknown)) != len(unknown):
        _fail('--unknown lists a position twice')
    if set(unknown) & set(known_paths):
        _fail(f'positions {sorted(set(unknown) & set(known_paths))} are both known and unknown')
    if unknown and set(unknown) | set(known_paths) != positions:
        _fail(f'known and unknown positions must cover 1..{m} exactly once')
    return known_paths


@app.command('solve-f')
def solve_f_cmd(
    g_path: Annotated[Path, typer.Argument(help='transforming function g')],
    y_path: Annotated[Path, typer.Argument(help='resultant function y')],
    known: Annotated[
        list[str] | None, typer.Option('--known', help='a known argument function, k=path')
    ] = None,
    unknown: Annotated[
        list[int] | None,
        typer.Option('--unknown', help='a position to solve for (default: every unknown one)'),
    ] = None,
    count: CountOption = False,
    enumerate_: EnumerateOption = None,
    out_dir: OutDirOption = Path(),
    fmt: FormatOption = TableFormat.TEXT,
):
    """Recover unknown argument functions from g, y and the known ones."""
    g = _load(g_path)
    y = _load(y_path)
    known_paths = _parse_positions(known or [], unknown or [], g.arity)
    known_tables = dict(zip(known_paths, _load_all(list(known_paths.values())), strict=True))
    try:
        space = solve_for_f(g, y, known_tables)
    except MvLogicError as e:
        _fail(str(e))

    total = count_f_solutions(space)
    if total == 0:
        typer.echo('no solution')
        return
    if count or enumerate_ is None:
        typer.echo(str(total))
    if enumerate_ is not None:
        _make_out_dir(out_dir)
        for index, assignment in enumerate(enumerate_f_solutions(space, enumerate_), start=1):
            typer.echo(f'solution {index}\n{format_assignment(assignment)}')
            for k, f in sorted(assignment.items()):
                _save(f, _solution_path(out_dir, index, fmt, f'-f{k}'), fmt)


@app.command('count')
def count_cmd(
    r: Annotated[int, typer.Argument(help='radix')],
    n: Annotated[int, typer.Argument(help='arity')],
):
    """Print the number of r-valued functions of n variables."""
    try:
        typer.echo(str(count_functions(r, n)))
    except MvLogicError as e:
        _fail(str(e))


@app.command('convert')
def convert_cmd(
    in_path: Annotated[Path, typer.Argument(help='table in any supported format')],
    out_path: Annotated[Path, typer.Argument(help='converted table')],
    to: Annotated[TableFormat, typer.Option('--to', help='output format')],
    paper_order: Annotated[
        bool, typer.Option('--paper-order', help='write vector lines from the highest address down')
    ] = False,
    alphabet: Annotated[
        str | None, typer.Option('--alphabet', help='symbols of a bare vector-line input, e.g. a,b,c')
    ] = None,
    source_paper_order: Annotated[
        bool, typer.Option('--source-paper-order', help='the input vector line is in paper order')
    ] = False,
):
    """Convert between text, binary and vector-line tables."""
    try:
        source_alphabet = Alphabet.parse(alphabet) if alphabet else None
    except MvLogicError as e:
        _fail(f'--alphabet: {e}')
    order = VectorOrder.PAPER if source_paper_order else VectorOrder.TABLE
    result = load_table_safe(in_path, source_alphabet, order)
    if not is_successful(result):
        _fail(f'{in_path}: {result.failure()}')
    try:
        save_table(
            result.unwrap(),
            out_path,
            to,
            VectorOrder.PAPER if paper_order else VectorOrder.TABLE,
        )
    except MvLogicError as e:
        _fail(str(e))


@app.command('show')
def show_cmd(table: Annotated[Path, typer.Argument(help='table file')]):
    """Print a table as address, argument columns and value."""
    typer.echo(format_truth_grid(_load(table)))


@app.command('serve')
def serve_cmd():
    """Serve the library as MCP tools over stdio."""
    from mvlogic.server import mcp

    mcp.run()


def run_cli():
    """Entry point for the mvlogic command."""
    stackprinter.set_excepthook(style='darkbg2')
    app()

from mvlogic.mvcore import Alphabet, constant_table, make_table
from mvlogic.server import (
    compose_tables,
    count_g_solutions,
    count_logic_functions,
    evaluate_table,
    solve_f_tables,
)
from mvlogic.tablestore import emit_text, parse_text
from tests.worked_example import F1, F2, F3, G, Y


def test_evaluate_table():
    assert evaluate_table(emit_text(G), ['a', 'a', 'c']) == 'c'
    assert evaluate_table(emit_text(G), ['a']).startswith('Error:')


def test_compose_tables_returns_a_document():
    doc = compose_tables(emit_text(G), [emit_text(f) for f in (F1, F2, F3)])
    assert parse_text(doc) == Y


def test_count_logic_functions():
    assert count_logic_functions(4, 1) == '256'
    assert count_logic_functions(1, 1).startswith('Error:')


def test_count_g_solutions():
    report = count_g_solutions([emit_text(f) for f in (F1, F2, F3)], emit_text(Y))
    assert 'bound: 2:c 4:c 11:a 16:b 17:a 22:b 26:a' in report
    assert report.endswith('solutions: 3486784401')


def test_count_g_solutions_reports_inconsistency():
    ab = Alphabet.of('a', 'b')
    report = count_g_solutions(
        [emit_text(constant_table(ab, 1, 'a'))], emit_text(make_table(ab, 1, ['a', 'b']))
    )
    assert report.startswith('Inconsistent:')


def test_solve_f_tables_lists_assignments():
    report = solve_f_tables(emit_text(G), emit_text(Y), {2: emit_text(F2), 3: emit_text(F3)}, 2)
    assert 'unknown: f1' in report
    assert report.count('f1 ~ [') == 2


def test_solve_f_tables_without_solution():
    ab = Alphabet.of('a', 'b')
    report = solve_f_tables(
        emit_text(constant_table(ab, 1, 'a')), emit_text(make_table(ab, 1, ['a', 'b'])), {}
    )
    assert report == 'no solution'


def test_count_logic_functions_prints_every_digit():
    report = count_logic_functions(2, 14)
    assert len(report) == 4933
    assert report == str(2**16384)

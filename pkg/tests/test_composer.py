import time

import pytest
from hypothesis import given, settings, strategies as st

from mvlogic.composer import CompositionSpec, check_budget, compose, compose_functions, evaluate
from mvlogic.errors import ArityMismatchError, CompositionSpecError, ResourceLimitError
from mvlogic.mvcore import Alphabet, TruthTable, constant_table, make_table, projection_table
from tests.strategies import alphabet_of, compositions, tables_over
from tests.worked_example import ABC, F1, F2, F3, G, TAB1, Y


def test_evaluate_uses_address_then_lookup():
    assert evaluate(G, ABC.encode('aac')) == ABC.index_of('c')
    assert evaluate(TAB1, (3,)) == 1
    const = constant_table(ABC, 3, 'b')
    assert all(evaluate(const, t) == 1 for t in [(0, 0, 0), (2, 1, 0), (2, 2, 2)])


def test_evaluate_rejects_wrong_arity():
    with pytest.raises(ArityMismatchError):
        evaluate(TAB1, (0, 0))


def test_compose_reproduces_the_worked_example():
    start = time.perf_counter()
    y = compose(CompositionSpec(g=G, args=(F1, F2, F3)))
    elapsed = time.perf_counter() - start
    assert y == Y
    assert y.symbols() == 'c a b a a c c c b'.split()
    assert elapsed < 0.01


def test_single_point_of_the_worked_example():
    x = ABC.encode('aa')
    z = tuple(evaluate(f, x) for f in (F1, F2, F3))
    assert ABC.decode(z) == ('a', 'a', 'c')
    assert ABC.symbols[evaluate(G, z)] == 'c'


def test_identity_permutation_returns_the_argument():
    identity = make_table(ABC, 1, ['a', 'b', 'c'])
    assert compose_functions(identity, [F2]) == F2


def test_spec_rejects_nullary_g():
    g = constant_table(ABC, 0, 'a')
    with pytest.raises(CompositionSpecError):
        CompositionSpec(g=g, args=())


def test_spec_rejects_wrong_argument_count():
    with pytest.raises(CompositionSpecError):
        CompositionSpec(g=G, args=(F1, F2))


def test_spec_rejects_mixed_alphabets():
    other = Alphabet.of('x', 'y', 'z')
    f = make_table(other, 2, ['x'] * 9)
    with pytest.raises(CompositionSpecError):
        CompositionSpec(g=G, args=(F1, F2, f))


def test_spec_rejects_mixed_arities():
    with pytest.raises(CompositionSpecError):
        CompositionSpec(g=G, args=(F1, F2, constant_table(ABC, 1, 'a')))


def test_compose_refuses_oversized_results():
    g = projection_table(ABC, 1, 1)
    big = constant_table(ABC, 4, 'a')
    with pytest.raises(ResourceLimitError):
        compose_functions(g, [big], cell_budget=80)
    assert compose_functions(g, [big], cell_budget=81) == big


def test_cell_budget_comes_from_the_environment(monkeypatch):
    monkeypatch.setenv('MVLOGIC_CELL_BUDGET', '8')
    g = projection_table(ABC, 1, 1)
    with pytest.raises(ResourceLimitError):
        compose_functions(g, [F1])


def test_check_budget_refuses_huge_arities_without_expanding_them():
    with pytest.raises(ResourceLimitError) as info:
        check_budget(3, 30_000_000, cell_budget=2**28)
    assert str(info.value) == '3^30000000 cells exceed the budget of 268435456'
    assert check_budget(2, 28, cell_budget=2**28) == 2**28
    with pytest.raises(ResourceLimitError):
        check_budget(2, 29, cell_budget=2**28)


@given(compositions())
@settings(max_examples=100)
def test_compose_matches_pointwise_definition(instance):
    g, args = instance
    y = compose_functions(g, args)
    r, n = g.radix, args[0].arity
    for k in range(r**n):
        z = tuple(f.values[k] for f in args)
        assert y.values[k] == evaluate(g, z)


@given(compositions(), st.data())
@settings(max_examples=50)
def test_projection_law(instance, data):
    g, args = instance
    m = len(args)
    k = data.draw(st.integers(1, m))
    assert compose_functions(projection_table(g.alphabet, m, k), args) == args[k - 1]


@given(compositions(), st.data())
@settings(max_examples=50)
def test_constant_absorption(instance, data):
    g, args = instance
    s = data.draw(st.sampled_from(g.alphabet.symbols))
    y = compose_functions(constant_table(g.alphabet, g.arity, s), args)
    assert y == constant_table(g.alphabet, args[0].arity, s)


@given(compositions(), st.data())
@settings(max_examples=50)
def test_unary_post_mapping_commutes_with_composition(instance, data):
    g, args = instance
    h = data.draw(tables_over(g.alphabet, 1))
    outer_last = compose_functions(h, [compose_functions(g, args)])
    outer_first = compose_functions(compose_functions(h, [g]), args)
    assert outer_last == outer_first


@pytest.mark.parametrize(('n', 'm'), [(4, 2), (1, 3), (0, 2), (3, 1)])
def test_mixed_arities(n, m):
    alphabet = alphabet_of(3)
    g = TruthTable(alphabet=alphabet, arity=m, values=tuple(k % 3 for k in range(3**m)))
    args = [
        TruthTable(alphabet=alphabet, arity=n, values=tuple((k + j) % 3 for k in range(3**n)))
        for j in range(m)
    ]
    y = compose_functions(g, args)
    assert y.arity == n
    assert y.size == 3**n

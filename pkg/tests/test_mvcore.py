import itertools

import pytest
from pydantic import ValidationError

from mvlogic.errors import (
    AddressOutOfRangeError,
    AlphabetError,
    AlphabetMismatchError,
    ArityMismatchError,
    InvalidDigitError,
    LengthMismatchError,
    UnknownSymbolError,
)
from mvlogic.mvcore import (
    Alphabet,
    TruthTable,
    address,
    all_tuples,
    constant_table,
    count_functions,
    enumerate_tables,
    make_table,
    projection_table,
    tuple_from_address,
)
from tests.worked_example import ABC, ABCD, TAB1


def test_alphabet_lookups_are_inverse():
    alphabet = Alphabet.parse('zero, one two')
    assert alphabet.symbols == ('zero', 'one', 'two')
    for i, s in enumerate(alphabet.symbols):
        assert alphabet.index_of(s) == i
        assert alphabet.symbol_at(i) == s
    assert alphabet.decode(alphabet.encode(['two', 'zero'])) == ('two', 'zero')


@pytest.mark.parametrize('symbols', [('a',), (), ('a', 'a'), ('a', 'b c'), ('a', '')])
def test_alphabet_rejects_bad_declarations(symbols):
    with pytest.raises(AlphabetError):
        Alphabet(symbols=symbols)


def test_alphabet_unknown_symbol():
    with pytest.raises(UnknownSymbolError):
        ABC.index_of('e')
    with pytest.raises(InvalidDigitError):
        ABC.symbol_at(3)


@pytest.mark.parametrize(
    ('symbols', 'expected'),
    [('a a c', 2), ('b a a', 9), ('a a a', 0), ('c c c', 26)],
)
def test_address_matches_table_rows(symbols, expected):
    assert address(ABC.encode(symbols.split()), 3) == expected


def test_address_rejects_out_of_range_digit():
    with pytest.raises(InvalidDigitError):
        address((0, 3, 1), 3)


def test_tuple_from_address_examples():
    assert ABC.decode(tuple_from_address(9, 3, 3)) == ('b', 'a', 'a')
    assert ABCD.decode(tuple_from_address(3, 4, 1)) == ('d',)
    assert tuple_from_address(0, 2, 2) == (0, 0)
    assert tuple_from_address(0, 3, 0) == ()


def test_tuple_from_address_out_of_range():
    with pytest.raises(AddressOutOfRangeError):
        tuple_from_address(27, 3, 3)
    with pytest.raises(AddressOutOfRangeError):
        tuple_from_address(-1, 3, 3)


@pytest.mark.parametrize('r', range(2, 6))
@pytest.mark.parametrize('n', range(5))
def test_address_is_an_ordered_bijection(r, n):
    tuples = list(itertools.product(range(r), repeat=n))
    addresses = [address(t, r) for t in tuples]
    # lexicographic order on tuples equals numeric order on addresses
    assert addresses == list(range(r**n))
    for k, t in enumerate(tuples):
        assert tuple_from_address(k, r, n) == t
    assert list(all_tuples(r, n)) == tuples


def test_make_table_agrees_with_values():
    assert TAB1.values == (0, 0, 2, 1)
    assert TAB1.symbols() == ['a', 'a', 'c', 'b']
    assert TAB1.evaluate_symbols('d') == 'b'


def test_make_table_constant_of_arity_zero():
    f = make_table(Alphabet.of('a', 'b'), 0, ['b'])
    assert f.values == (1,)
    assert f.evaluate_symbols() == 'b'


def test_make_table_errors():
    with pytest.raises(LengthMismatchError):
        make_table(ABC, 2, ['a'] * 8)
    with pytest.raises(UnknownSymbolError):
        make_table(ABC, 1, ['a', 'b', 'e'])


def test_truth_table_validates_values():
    with pytest.raises(InvalidDigitError):
        TruthTable(alphabet=ABC, arity=1, values=(0, 1, 3))
    with pytest.raises(LengthMismatchError):
        TruthTable(alphabet=ABC, arity=1, values=(0, 1))


def test_truth_table_is_immutable_and_hashable():
    f = make_table(ABC, 1, ['a', 'b', 'c'])
    assert f == make_table(ABC, 1, ['a', 'b', 'c'])
    assert len({f, make_table(ABC, 1, ['a', 'b', 'c'])}) == 1
    with pytest.raises(ValidationError):
        f.arity = 2  # type: ignore[misc]


def test_evaluate_symbols_arity_mismatch():
    with pytest.raises(ArityMismatchError):
        TAB1.evaluate_symbols('a', 'a')


@pytest.mark.parametrize(('r', 'n', 'expected'), [(4, 1, 256), (2, 1, 4), (2, 2, 16), (3, 1, 27)])
def test_count_functions(r, n, expected):
    assert count_functions(r, n) == expected


@pytest.mark.parametrize(('r', 'n'), [(2, 0), (2, 1), (3, 0), (3, 1), (2, 2)])
def test_count_functions_matches_enumeration(r, n):
    alphabet = Alphabet(symbols=tuple('abc'[:r]))
    tables = list(enumerate_tables(alphabet, n))
    assert len(set(tables)) == len(tables) == count_functions(r, n)


def test_count_functions_is_exact_for_large_instances():
    assert count_functions(5, 4) == 5**625
    with pytest.raises(AlphabetError):
        count_functions(1, 3)


def test_constant_and_projection_tables():
    assert constant_table(ABC, 2, 'b').values == (1,) * 9
    p2 = projection_table(ABC, 2, 2)
    assert p2.symbols() == ['a', 'b', 'c'] * 3


def test_relabel_keeps_the_function():
    reordered = Alphabet.of('c', 'a', 'b')
    f = make_table(ABC, 2, 'c a b a a c c c b'.split())
    g = f.relabel(reordered)
    for t in itertools.product('abc', repeat=2):
        assert g.evaluate_symbols(*t) == f.evaluate_symbols(*t)
    assert f.relabel(ABC) is f
    with pytest.raises(AlphabetMismatchError):
        f.relabel(ABCD)

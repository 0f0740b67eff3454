import pytest
from hypothesis import given
from hypothesis import strategies as st

from founderseg.errors import AlphabetTooLarge, EmptyInput, OutOfRange, UnequalLengths
from founderseg.model import build_matrix, matrix_from_ranks

from conftest import EXAMPLE1_ROWS


def test_first_occurrence_ranking(small):
    assert (small.m, small.n, small.sigma) == (3, 5, 2)
    assert small.symbol_table == {"b": 0, "a": 1}


def test_example1_shape():
    mat = build_matrix(EXAMPLE1_ROWS)
    assert (mat.m, mat.n, mat.sigma) == (6, 7, 3)


def test_explicit_alphabet_fixes_ranks(example1):
    assert example1.symbols == ("a", "c", "t")
    assert example1.rows[1] == bytes([0, 1, 1, 0, 2, 2, 0])


def test_unequal_lengths():
    with pytest.raises(UnequalLengths):
        build_matrix(["ab", "abc"])


def test_empty_input():
    with pytest.raises(EmptyInput):
        build_matrix([])


def test_alphabet_too_large():
    row = "".join(chr(0x100 + i) for i in range(257))
    with pytest.raises(AlphabetTooLarge):
        build_matrix([row])
    assert build_matrix([row[:256]]).sigma == 256


def test_gap_characters_are_symbols():
    mat = build_matrix(["AC-N", "ACGN"])
    assert mat.sigma == 5


def test_column(example1):
    t = example1.symbol_table["t"]
    a = example1.symbol_table["a"]
    assert list(example1.column(7)) == [t, a, t, t, t, t]
    assert list(build_matrix(["abc"]).column(2)) == [1]
    with pytest.raises(OutOfRange):
        example1.column(0)
    with pytest.raises(OutOfRange):
        example1.column(8)


rows_strategy = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.text(alphabet="acgtN-", min_size=n, max_size=n), min_size=1, max_size=6)
)


@given(rows_strategy)
def test_round_trip(rows):
    mat = build_matrix(rows)
    assert mat.decode() == rows
    assert all(s < mat.sigma for row in mat.rows for s in row)


@given(rows_strategy)
def test_columns_reconstruct_matrix(rows):
    mat = build_matrix(rows)
    cols = [mat.column(k) for k in range(1, mat.n + 1)]
    assert list(cols) == list(mat.columns())
    assert tuple(bytes(r) for r in zip(*cols)) == mat.rows


def test_matrix_from_ranks_keeps_sigma():
    mat = matrix_from_ranks([[0, 1], [1, 1]], sigma=4)
    assert mat.sigma == 4
    assert mat.decode() == ["01", "11"]

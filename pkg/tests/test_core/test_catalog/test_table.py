import pytest

from lienil.core.catalog.entries import CORANK_TABLE
from lienil.core.catalog.table import corank_row, corank_table, growth_law
from lienil.core.errors import InputError


def test_table_rows():
    rows = corank_table()
    assert [row.corank for row in rows] == list(range(7))
    for row in rows:
        assert row.names == CORANK_TABLE[row.corank]


@pytest.mark.parametrize("t", range(6))
def test_rows_that_agree(t):
    row = corank_row(t)
    assert row.agrees
    assert row.computed == (t,) * len(row.names)


def test_row_six_is_flagged():
    row = corank_row(6)
    assert not row.agrees
    assert dict(zip(row.names, row.computed)) == {
        "L4_2+A(1)": 3,
        "L5_5": 6,
        "H(2)+A(1)": 6,
        "L5_8+A(1)": 6,
        "L8_2": 6,
    }
    assert row.flags == (
        "L4_2+A(1): table says t = 6, engine computes t = 3",
        "L5_3: engine computes t = 6, but no row lists it",
    )
    assert row.to_dict()["computed"] == [3, 6, 6, 6, 6]


def test_missing_row():
    with pytest.raises(InputError):
        corank_row(7)


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_growth_law_holds_past_h1(m, k):
    check = growth_law(m, k)
    assert check.claimed == check.computed == 2 * m + k + 1
    assert check.flag is None


@pytest.mark.parametrize("k", range(5))
def test_growth_law_fails_for_h1(k):
    check = growth_law(1, k)
    assert check.computed == k + 1
    assert check.claimed == k + 3
    assert check.flag == f"h(1) + i^{k}: claimed t = {k + 3}, engine computes t = {k + 1}"

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from magiclab import rectangles as rc
from magiclab.oracle import brute_force_magic_rectangle


def test_small_cases():
    with pytest.raises(rc.NoRectangle):
        rc.magic_rectangle(2, 2)
    with pytest.raises(rc.NoRectangle):
        rc.magic_rectangle(2, 3)
    with pytest.raises(ValueError):
        rc.magic_rectangle(1, 3)
    r = rc.magic_rectangle(2, 4)
    assert r.row_sum == 18 and r.col_sum == 9
    r = rc.magic_rectangle(3, 5)
    assert r.row_sum == 40 and r.col_sum == 24
    assert (r.cells.sum(axis=1) == 40).all() and (r.cells.sum(axis=0) == 24).all()


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 24), st.integers(2, 24))
def test_existence_matches_condition(m, n):
    if rc.rectangle_exists(m, n):
        r = rc.magic_rectangle(m, n)
        rc.check_rectangle(r.cells)
        assert r.cells.shape == (m, n)
    else:
        with pytest.raises(rc.NoRectangle):
            rc.magic_rectangle(m, n)


@pytest.mark.parametrize("m,n", [(3, 3), (5, 5), (7, 7), (3, 7), (7, 3), (5, 9), (9, 15),
                                 (15, 9), (3, 21), (11, 13), (2, 6), (6, 2), (6, 10), (4, 6),
                                 (10, 14), (8, 12)])
def test_selected(m, n):
    rc.check_rectangle(rc.magic_rectangle(m, n).cells)


def test_brute_force_agrees():
    for m in range(2, 9):
        for n in range(m, 9):
            if m * n <= 16:
                res = brute_force_magic_rectangle(m, n)
                assert res.found == rc.rectangle_exists(m, n), (m, n)
                if res.found:
                    rc.check_rectangle(np.array(res.labels).reshape(m, n))


def test_check_rejects():
    with pytest.raises(ValueError):
        rc.check_rectangle([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        rc.check_rectangle([[1, 1], [2, 2]])


def test_text_round_trip():
    r = rc.magic_rectangle(3, 5)
    assert np.array_equal(rc.rectangle_from_text(r.to_text()).cells, r.cells)
    with pytest.raises(ValueError):
        rc.rectangle_from_text("1 2\n3 4\n")

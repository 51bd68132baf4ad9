from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cherecut.graded import (
    GradedPoly,
    ext_table_from_json,
    ext_table_to_json,
    factor_decomposition,
    kunneth_combine,
)

polys = st.dictionaries(
    st.integers(-10, 10), st.integers(1, 5), max_size=6
).map(GradedPoly)


def t(k: int) -> GradedPoly:
    return GradedPoly.monomial(k)


def test_worked_factorizations():
    assert (t(5) + t(3)) * t(2) == t(7) + t(5)
    assert t(1) * t(1) == t(2)
    big = t(11) + GradedPoly({9: 2, 7: 2}) + t(5)
    assert big * t(1) == t(12) + GradedPoly({10: 2, 8: 2}) + t(6)


def test_factor_decomposition():
    assert factor_decomposition(t(5) + t(3), t(2)) == t(7) + t(5)
    assert factor_decomposition(GradedPoly.one(), t(4)) == t(4)
    assert factor_decomposition(GradedPoly.zero(), t(4)).is_zero()


def test_zero_and_identity():
    z = GradedPoly.zero()
    assert z.is_zero()
    assert z + t(3) == t(3)
    assert z * t(3) == z
    assert GradedPoly.one() * t(3) == t(3)


def test_negative_coefficients_rejected():
    with pytest.raises(ValueError):
        GradedPoly({1: -1})


def test_json_round_trip():
    p = GradedPoly({5: 1, 3: 2})
    assert GradedPoly.from_json(p.to_json()) == p
    assert p.to_json() == {"3": 2, "5": 1}


def test_str_form():
    assert str(t(7) + t(5)) == "t^7 + t^5"
    assert str(GradedPoly.zero()) == "0"
    assert str(GradedPoly.one()) == "1"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(polys, polys)
def test_total_is_multiplicative(a, b):
    assert (a * b).total() == a.total() * b.total()


def test_kunneth_combine():
    left = {0: t(0), 1: t(2)}
    right = {0: t(1)}
    combined = kunneth_combine(left, right)
    assert combined == {0: t(1), 1: t(3)}

    # convolution in homological degree
    left = {0: GradedPoly({0: 2}), 2: t(1)}
    right = {1: t(0), 2: t(4)}
    combined = kunneth_combine(left, right)
    assert set(combined) == {1, 2, 3, 4}
    assert combined[1] == GradedPoly({0: 2})
    assert combined[2] == GradedPoly({4: 2})
    assert combined[3] == t(1)
    assert combined[4] == t(5)


def test_ext_table_json_round_trip():
    table = {0: t(0), 3: GradedPoly({2: 1, 0: 4})}
    assert ext_table_from_json(ext_table_to_json(table)) == table

from fractions import Fraction

import pytest

from omega3rb.coeff import Table, UncoveredIndex, constant, sparse, window


def test_table_uncovered_index_named():
    t = constant(-1).restrict(window(2))
    assert t(2) == -1
    with pytest.raises(UncoveredIndex) as exc:
        t(3)
    assert "3" in str(exc.value)


def test_restrict_examples():
    assert constant(0).restrict(window(2)).as_tuple() == (0,) * 5
    assert constant(-1).restrict(window(1)).as_tuple() == (-1, -1, -1)


def test_from_sequence_and_equality():
    a = Table.from_sequence(window(1), [0, -1, Fraction(1, 2)])
    b = sparse({0: -1, 1: Fraction(1, 2)}).restrict(window(1))
    assert a == b and hash(a) == hash(b)
    assert a.to_json() == {"-1": "0", "0": "-1", "1": "1/2"}


def test_scaled():
    f = constant(-3).scaled(Fraction(1, 3))
    assert f(10) == -1

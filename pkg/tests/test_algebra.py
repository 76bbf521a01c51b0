from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from omega3rb.algebra import (
    Element, L, bracket, bracket_generates, det3, det3_vanishes_closed_form,
    format_scalar, fundamental_identity_residual, parse_scalar,
)

idx = st.integers(-15, 15)
rationals = st.fractions(max_denominator=50)


@pytest.mark.parametrize("lmn, d", [((0, 1, 2), 4), ((1, 1, 5), 0), ((0, 2, 4), 0), ((1, 2, 3), -4)])
def test_det3_examples(lmn, d):
    assert det3(*lmn) == d


@pytest.mark.parametrize("lmn, vanishes", [((1, 3, 5), True), ((0, 1, 2), False), ((7, 7, 2), True)])
def test_det_closed_form_examples(lmn, vanishes):
    assert det3_vanishes_closed_form(*lmn) is vanishes


@given(idx, idx, idx)
def test_det_closed_form_agrees(l, m, n):
    assert (det3(l, m, n) == 0) == det3_vanishes_closed_form(l, m, n)


def test_bracket_examples():
    assert bracket(L(0), L(1), L(2)) == L(2, 4)
    assert bracket(L(3), L(3), L(8)) == 0
    assert bracket(L(0, 2), L(1), L(2)) == L(2, 8)


@given(idx, idx, idx)
def test_bracket_skew_symmetric(l, m, n):
    gens = {0: L(l), 1: L(m), 2: L(n)}
    base = bracket(gens[0], gens[1], gens[2])
    for perm in permutations(range(3)):
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        sign = -1 if inversions % 2 else 1
        assert bracket(*(gens[p] for p in perm)) == base * sign


@given(st.lists(st.tuples(idx, rationals), max_size=3), st.lists(st.tuples(idx, rationals), max_size=3), idx, idx)
def test_bracket_trilinear(xs, ys, m, n):
    x, y = Element(xs), Element(ys)
    assert bracket(x + y, L(m), L(n)) == bracket(x, L(m), L(n)) + bracket(y, L(m), L(n))


def test_fundamental_identity_examples():
    assert fundamental_identity_residual(L(0), L(1), L(2), L(3), L(4)) == 0
    assert fundamental_identity_residual(L(-2), L(1), L(5), L(0), L(3)) == 0
    assert fundamental_identity_residual(L(4), L(4), L(1), L(0), L(3)) == 0


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-3, 3)), min_size=1, max_size=2))
def test_fundamental_identity_on_combinations(terms):
    x = Element(terms)
    assert fundamental_identity_residual(x, L(1), L(2), L(-1), x) == 0


@pytest.mark.parametrize("t, expect", [(5, (0, 1, 5)), (0, (1, 2, -2)), (1, (2, 3, -3))])
def test_bracket_generates_examples(t, expect):
    assert bracket_generates(t) == expect


@given(st.integers(-200, 200))
def test_bracket_generates_hits_target(t):
    l, m, n = bracket_generates(t)
    assert l + m + n - 1 == t and det3(l, m, n) != 0


def test_element_printing_golden():
    assert str(Element.zero()) == "0"
    assert str(L(2, 4)) == "4*L_2"
    e = Element({5: Fraction(-1, 3), -2: 1, 0: Fraction(7, 2)})
    assert str(e) == "1*L_-2 + 7/2*L_0 - 1/3*L_5"


def test_zero_coefficients_not_stored():
    e = L(3) - L(3)
    assert len(e) == 0 and e == 0 and not e


@given(rationals)
def test_scalar_round_trip(q):
    assert parse_scalar(format_scalar(q)) == q


@pytest.mark.parametrize("text", ["0.5", "1e3", "abc", "1/0", ""])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from omega3rb import catalog
from omega3rb.algebra import L
from omega3rb.coeff import constant, sparse, window
from omega3rb.operator import (
    HomOp, InvalidWeight, SkippedTriple, apply, check_k_collapse, rb_residual,
    rb_residual_expanded, rescale_weight, sweep,
)


def test_apply_examples():
    assert apply(HomOp(0, constant(-1)), L(7)) == L(7, -1)
    assert apply(HomOp(2, sparse({5: 3})), L(3)) == L(5, 3)
    assert apply(HomOp(0, constant(0)), L(4) + L(-1)) == 0


def test_apply_uncovered():
    R = HomOp(0, constant(1).restrict(window(2)))
    with pytest.raises(Exception) as exc:
        apply(R, L(3))
    assert "3" in str(exc.value)


def test_rb_residual_examples():
    assert rb_residual(HomOp(0, constant(0)), 1, 4, -2, 9) == 0
    assert rb_residual(HomOp(0, constant(-1)), 1, 0, 1, 2) == 0
    res = rb_residual(HomOp(0, constant(1)), 1, 0, 1, 2)
    assert res != 0 and res.support() == (2,)


def test_skipped_triple_carries_triple():
    R = HomOp(0, constant(-1).restrict(window(3)))
    with pytest.raises(SkippedTriple) as exc:
        rb_residual(R, 1, 1, 2, 3)
    assert exc.value.triple == (1, 2, 3) and exc.value.index == 5


values = st.sampled_from([Fraction(0), Fraction(-1), Fraction(2), Fraction(-1, 2), Fraction(3, 5)])


@settings(max_examples=60, deadline=None)
@given(st.lists(values, min_size=21, max_size=21), st.integers(-2, 2), st.sampled_from([0, 1, 2, Fraction(1, 3)]),
       st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)))
def test_expanded_residual_matches_composition(vals, k, weight, lmn):
    f = sparse(dict(zip(range(-10, 11), vals)))
    comp = rb_residual(HomOp(k, f), weight, *lmn).as_dict()
    assert comp == rb_residual_expanded(f, k, weight, *lmn)


def test_rescale_examples():
    R = rescale_weight(HomOp(0, constant(-3)), 3)
    assert R.f(17) == -1
    same = HomOp(0, constant(5))
    assert rescale_weight(same, 1) is same
    with pytest.raises(InvalidWeight):
        rescale_weight(same, 0)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.sampled_from([2, -3, Fraction(1, 2)]))
def test_rescale_equivalence_triplewise(l, m, n, lam):
    # residual_lam(R) = lam^3 residual_1(R / lam)
    f = sparse({0: -2, 1: 1, 2: Fraction(1, 2), -1: -2, 3: 4})
    R = HomOp(0, f)
    lhs = rb_residual(R, lam, l, m, n)
    rhs = rb_residual(rescale_weight(R, lam), 1, l, m, n) * Fraction(lam) ** 3
    assert lhs == rhs


def test_sweep_counts_skips_for_tables():
    rep = sweep(HomOp(0, constant(-1).restrict(window(3))), 1, window(3))
    assert rep.passed and rep.skipped > 0 and rep.checked + rep.skipped == 7 ** 3


def test_sweep_family_fin2():
    rep = sweep(HomOp(0, catalog.build_family("FIN-2")), 1, window(6))
    assert rep.passed and rep.skipped == 0


def test_witness_cap():
    rep = sweep(HomOp(0, constant(1)), 1, window(4))
    assert not rep.passed and len(rep.witnesses) == 10 and rep.failed > 10


def test_k_collapse_examples():
    assert check_k_collapse(HomOp(1, constant(0)), window(4)).passed
    bad = check_k_collapse(HomOp(1, constant(-1)), window(4))
    assert not bad.passed and bad.residuals.witnesses
    assert check_k_collapse(HomOp(-2, constant(0)), window(4)).passed
    with pytest.raises(ValueError):
        check_k_collapse(HomOp(0, constant(0)), window(2))

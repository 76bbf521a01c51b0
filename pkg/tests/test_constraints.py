from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from omega3rb import catalog
from omega3rb.coeff import constant, sparse, window
from omega3rb.constraints import (
    MSupporter, PreconditionError, cor01_report, eq00_residual, eq01_residual, eq37_residual,
    eq39_residual, even_residual, extract_supporters, klmn_nonvanishing_report, lemma_f00_residuals,
    lemma_fa_residuals, odd_residual, rb_core, supporters_match,
)
from omega3rb.operator import HomOp, rb_residual

F0A1 = catalog.build_family("F0A-1", {"a": 2, "m0": 1})
F0A2 = catalog.build_family("F0A-2", {"a": 1, "m0": 1})


def test_odd_even_examples():
    assert odd_residual(constant(0), 0, 1, 0) == 0
    assert odd_residual(constant(-1), 0, 1, 0) == 0
    assert odd_residual(constant(1), 0, 1, 0) == -6
    assert even_residual(constant(0), 0, 0, 1) == 0
    assert even_residual(constant(-1), 0, 0, 1) == 0
    assert even_residual(sparse({1: -1, 0: 0, 2: 5}), 0, 0, 1) == 0
    with pytest.raises(PreconditionError):
        odd_residual(constant(0), 2, 2, 0)
    with pytest.raises(PreconditionError):
        even_residual(constant(0), 0, 3, 3)


small = st.integers(-3, 3)
vals = st.sampled_from([0, -1, 2, Fraction(1, 2)])


@given(st.lists(vals, min_size=31, max_size=31), small, small, small)
def test_odd_form_is_the_rb_residual(seq, l, m, n):
    # D(2l+1, 2m+1, 2n) = 4(m - l), so the full residual is that multiple
    f = sparse(dict(zip(range(-15, 16), seq)))
    if l == m:
        return
    res = rb_residual(HomOp(0, f), 1, 2 * l + 1, 2 * m + 1, 2 * n)
    assert res.coeff(2 * l + 2 * m + 2 * n + 1) == 4 * (m - l) * odd_residual(f, l, m, n)


def test_eq37_examples():
    assert eq37_residual(constant(-1), 5) == 0
    assert eq37_residual(constant(0), 5) == 0
    assert eq37_residual(sparse({0: 1, 1: 1, 5: 2}), 5) == 18
    with pytest.raises(PreconditionError):
        eq37_residual(constant(0), 1)


def test_lemma_fa_examples():
    with pytest.raises(PreconditionError):
        lemma_fa_residuals(sparse({0: 2}), 2, 0, 1, 2)
    f = sparse({1: -1, 3: -1, 5: -1, -1: -1, -3: -1})
    assert lemma_fa_residuals(f, 0, 0, 1, 1)[0] == 0


@pytest.mark.parametrize("fam", [F0A1, F0A2])
def test_lemma_fa_vanishes_on_families(fam):
    a = fam.params["a"]
    for l in range(-3, 4):
        for m in range(-3, 4):
            for n in range(-3, 4):
                assert all(v in (None, 0) for v in lemma_fa_residuals(fam, a, l, m, n))


def test_eq39_eq00_eq01_examples():
    assert all(eq39_residual(F0A1, m) == 0 for m in range(-10, 11))
    assert eq00_residual(F0A2, 1, 1, 1) == 0
    assert eq01_residual(F0A1, 1, 1, 2, 3) == 0
    assert eq01_residual(F0A2, 1, 1, 3, 2) == 0
    with pytest.raises(PreconditionError):
        eq01_residual(F0A1, 1, 1, 2, 2)
    with pytest.raises(PreconditionError):
        eq00_residual(F0A1, 1, 0, 2)


def test_eq01_reduces_to_evenness():
    # (k, -k, k): 1/f(2m0k) + 1/f(-2m0k) ... collapses to f(2m0k) = f(-2m0k)
    for k in range(1, 4):
        assert eq01_residual(F0A2, 1, k, -k, k) == 0
        assert F0A2(2 * k) == F0A2(-2 * k)


def test_klmn_examples():
    assert klmn_nonvanishing_report(F0A1, window(8)).passed
    assert klmn_nonvanishing_report(F0A2, window(8)).passed
    bad = sparse({0: 1, 1: -2, 2: 1, 4: 1})
    rep = klmn_nonvanishing_report(bad, window(8))
    assert any(v.item == 1 and v.args[:2] == (1, 2) for v in rep.violations)


def test_lemma_f00_examples():
    f = sparse({0: 0, 1: -1, 2: 1, 4: 1, 6: 1})
    assert lemma_f00_residuals(f, 0, 1, 2)[3] == 2
    assert lemma_f00_residuals(f, 0, 1, 1)[3] is None


def test_cor01_examples():
    fam = catalog.build_family("F0A3-A1", {"m0": 1, "n0": -1})
    assert cor01_report(fam, window(8)).passed
    rep = cor01_report(sparse({1: -1, 4: 1, -4: 1}), window(8))
    assert any(v.item == 5 and v.args == (2,) for v in rep.violations)
    rep = cor01_report(sparse({1: -1}), window(8))
    assert any(v.item == 6 and v.args == (1,) for v in rep.violations)


def test_supporters_examples():
    s = extract_supporters(constant(0), window(4))
    assert (s.W1, s.U1, s.W2, s.U2) == ((), (), (-4, -2, 2, 4), (-3, -1, 3))
    s = extract_supporters(catalog.build_family("R01-2", {"m0": 1}), window(4))
    assert (s.W1, s.U1, s.W2, s.U2) == ((-4, -2, 2, 4), (-3, -1, 3), (), ())
    assert extract_supporters(sparse({2: 5}), window(4)).W1 == (2,)


def test_m_supporter():
    t = MSupporter(2)
    assert 4 in t and -8 in t and 0 not in t and 2 not in t
    assert 1 in t and 5 in t and -3 in t and 3 not in t
    assert supporters_match(F0A1, 1, window(10))
    assert supporters_match(catalog.build_family("F0A-1", {"a": 2, "m0": 2}), 2, window(10))


def test_rb_core_symmetry():
    # f -> -1 - f flips the sign of the core
    for x, y, z, w in [(2, 0, -1, Fraction(1, 2)), (3, 3, 5, -7)]:
        assert rb_core(-1 - x, -1 - y, -1 - z, -1 - w) == -rb_core(x, y, z, w)

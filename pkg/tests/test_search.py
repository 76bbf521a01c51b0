from fractions import Fraction

import pytest

from conftest import load_fixture

from omega3rb import catalog
from omega3rb.coeff import window
from omega3rb.constraints import eq37_residual
from omega3rb.search import (
    BudgetExceeded, CatalogIndex, SearchSpace, Solution, completeness_report, enumerate_solutions, explain,
    reachable_indices,
)


def tables(sols):
    return [s.table.as_tuple() for s in sols]


def test_single_value_zero():
    sols = enumerate_solutions(SearchSpace(3, ["0"]), workers=1)
    assert tables(sols) == [(0,) * 7]


def test_k_nonzero_collapses():
    space = SearchSpace(3, ["0", "-1"], k=1)
    reach = reachable_indices(space)
    assert reach
    for s in enumerate_solutions(space, workers=1):
        assert all(s.table(i) == 0 for i in reach if -3 <= i <= 3)


def test_includes_fin_families():
    sols = set(tables(enumerate_solutions(SearchSpace(4, ["0", "-1"]), workers=1)))
    assert (0,) * 9 in sols and (-1,) * 9 in sols


def test_catalog_restrictions_appear():
    # every family that passed the sufficiency sweep and takes values in {0, -1} shows up
    sols = set(tables(enumerate_solutions(SearchSpace(5, ["0", "-1"]), workers=1)))
    w = window(5)
    seen = 0
    for row in load_fixture("sufficiency")["rows"]:
        if row["outcome"] != "pass":
            continue
        t = catalog.build_family(row["case"], row["params"], row["reading"]).restrict(w).as_tuple()
        if set(t) <= {0, -1}:
            seen += 1
            assert t in sols, row
    assert seen > 20


def test_no_solution_violates_eq37():
    for s in enumerate_solutions(SearchSpace(4, ["0", "-1"]), workers=1):
        for m in range(-4, 5):
            if m not in (0, 1):
                assert eq37_residual(s.table, m) == 0


def test_determinism_across_workers():
    space = SearchSpace(4, ["0", "-1", "2"])
    assert tables(enumerate_solutions(space, workers=1)) == tables(enumerate_solutions(space, workers=2))


def test_budget_refusal():
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_solutions(SearchSpace(10, ["0", "-1", "2"], budget=1000), workers=1)
    assert exc.value.required == 3 ** 21


def test_values_parsed_exactly():
    space = SearchSpace(1, ["1/2", "-1", "-1"])
    assert space.values == (Fraction(-1), Fraction(1, 2))
    with pytest.raises(ValueError):
        SearchSpace(1, ["0.5"])


def _solution_for(fam, radius):
    return Solution(fam.restrict(window(radius)), 0, 0)


def test_explain_examples():
    index = CatalogIndex(4, (-3, 3), [Fraction(0), Fraction(-1), Fraction(1), Fraction(-2),
                                      Fraction(-1, 3), Fraction(-2, 3)])
    e = explain(_solution_for(catalog.build_family("FIN-1"), 4), 1, index)
    assert "FIN-1" in {m.case for m in e.matches}
    e = explain(_solution_for(catalog.build_family("FIN-2"), 4), 1, index)
    assert "FIN-2" in {m.case for m in e.matches}
    fam = catalog.build_family("F0A-2", {"a": 1, "m0": 1})
    e = explain(_solution_for(fam, 4), 1, index)
    hits = [m for m in e.matches if m.case == "F0A-2"]
    assert hits and all(m.params["a"] == 1 for m in hits)
    # without an index one is built from the table's own values
    assert not explain(_solution_for(catalog.build_family("FIN-2"), 3), 1).unexplained


def test_completeness_trivial():
    rep = completeness_report(SearchSpace(5, ["0"]), 2, workers=1)
    assert len(rep.solutions) == 1 and not rep.unexplained
    assert "FIN-1" in rep.counts()


def test_catalog_index_reads_off_scalars():
    idx = CatalogIndex(4, (-3, 3), [Fraction(0), Fraction(-1), Fraction(5)])
    fam = catalog.build_family("F0A3-A4", {"m0": 1, "g": 5})
    assert any(m.case == "F0A3-A4" for m in idx.lookup(fam.restrict(window(4))))

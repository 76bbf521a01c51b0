from fractions import Fraction

import pytest

from omega3rb import catalog
from omega3rb.coeff import UncoveredIndex, window

from conftest import load_fixture


def test_forty_cases():
    ids = [cid for cid, _ in catalog.enumerate_cases()]
    assert len(ids) == 40 and len(set(ids)) == 40
    assert {f"RM1-{i}" for i in range(1, 8)} <= set(ids)
    assert {f"F0A3-B{i}" for i in range(1, 8)} <= set(ids)


def test_build_examples():
    f = catalog.build_family("FIN-1")
    assert all(f(m) == 0 for m in range(-20, 21))
    f = catalog.build_family("F0A-2", {"a": 1, "m0": 1})
    for k in range(-3, 4):
        assert (f(4 * k), f(4 * k + 1), f(4 * k + 2), f(4 * k + 3)) == (1, -2, Fraction(-1, 3), Fraction(-2, 3))
    f = catalog.build_family("RM0-3", {"m0": 2})
    minus = {m for m in range(-12, 13) if f(m) == -1}
    assert minus == {0, 4, 8, 12, -3, 1, 5, 9}
    assert set(f(m) for m in range(-12, 13)) <= {0, -1}


def test_eval_examples():
    assert catalog.evaluate(catalog.build_family("F0A-1", {"a": 2, "m0": 1}), 0) == 2
    assert catalog.evaluate(catalog.build_family("F0A-1", {"a": 2, "m0": 1}), 3) == -3
    assert catalog.evaluate(catalog.build_family("F0A-1", {"a": 2, "m0": 2}), 2) == 0
    t = catalog.restrict(catalog.build_family("FIN-2"), window(1))
    with pytest.raises(UncoveredIndex):
        catalog.evaluate(t, 2)


def test_restrict_examples():
    t = catalog.restrict(catalog.build_family("FIN-2"), window(1))
    assert t.as_tuple() == (-1, -1, -1)
    t = catalog.restrict(catalog.build_family("F0A-2", {"a": 1, "m0": 1}), (0, 3))
    assert t.as_tuple() == (1, -2, Fraction(-1, 3), Fraction(-2, 3))


@pytest.mark.parametrize("case, params, fragment", [
    ("F0A-2", {"a": "-1/2", "m0": 1}, "-1/2"),
    ("F0A-2", {"a": -1, "m0": 1}, "-1"),
    ("F0A-1", {"a": 0, "m0": 1}, "a"),
    ("R01-1", {"m0": 0}, "m0"),
    ("FIN-3", {"f0": 1, "f1": 1}, "f0"),
])
def test_validators_reject(case, params, fragment):
    with pytest.raises(catalog.ValidationError) as exc:
        catalog.build_family(case, params)
    assert fragment in str(exc.value)


def test_params_parsing_errors():
    with pytest.raises(catalog.ValidationError):
        catalog.build_family("F0A-1", {"a": "0.5", "m0": 1})
    with pytest.raises(catalog.ValidationError):
        catalog.build_family("F0A-1", {"a": 2, "m0": "1/2"})
    with pytest.raises(catalog.ValidationError):
        catalog.build_family("F0A-1", {"a": 2})
    with pytest.raises(catalog.ValidationError):
        catalog.build_family("F0A-1", {"a": 2, "m0": 1, "zz": 3})
    with pytest.raises(catalog.ValidationError):
        catalog.get_case("NOPE-1")
    assert catalog.parse_params("a=1/2, m0=1") == {"a": "1/2", "m0": "1"}


def test_params_document(tmp_path):
    p = tmp_path / "fam.ini"
    p.write_text("[family]\ncase = F0A-2\na = 1\nm0 = 1\n")
    case, reading, params = catalog.load_params_document(str(p))
    assert case == "F0A-2" and reading is None and params == {"a": "1", "m0": "1"}
    bad = tmp_path / "bad.ini"
    bad.write_text("[other]\nx = 1\n")
    with pytest.raises(catalog.ValidationError):
        catalog.load_params_document(str(bad))


def test_branch_consistency():
    for cid in catalog.CASES:
        case = catalog.get_case(cid)
        for params, built in catalog.fixture_families(cid):
            for fam in filter(None, built.values()):
                if case.group == "F0A":
                    a = fam.params["a"]
                    assert (fam(0), fam(1)) == (a, -1 - a)
                elif case.group in ("F0A1", "F0A3"):
                    assert (fam(0), fam(1)) == (0, -1), (cid, params)


def test_amended_readings_marked():
    for cid in catalog.CASES:
        case = catalog.get_case(cid)
        assert "literal" in case.readings
        fam = None
        for params, built in catalog.fixture_families(cid):
            for reading, f in built.items():
                if f is not None and reading != "literal":
                    assert reading in repr(f)


def test_distinctness_overlaps_match_fixture():
    frozen = load_fixture("overlaps")
    w = window(12)
    groups = {}
    for cid in catalog.CASES:
        for params, built in catalog.fixture_families(cid):
            for reading, fam in built.items():
                if fam is None:
                    continue
                key = tuple(fam(i) for i in range(w[0], w[1] + 1))
                label = f"{cid}[{reading}]" + ("" if not params else " " + fam.params_text())
                groups.setdefault(key, []).append(label)
    multi = sorted(sorted(g) for g in groups.values()
                   if len({x.split("[")[0] + x.split("]")[1] for x in g}) > 1)
    assert multi == frozen["overlaps"]

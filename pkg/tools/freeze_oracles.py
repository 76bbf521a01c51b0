"""Regenerate the frozen oracle fixtures under tests/fixtures/.

The oracles here deliberately avoid the code paths they later check:
sufficiency outcomes come from the odd/even scalar identities rather than
the compositional sweep, and the completeness table set comes from a
plain brute force over every table rather than the pruned search.

    python tools/freeze_oracles.py
"""

import itertools
import json
import sys
import time
from pathlib import Path

from omega3rb import catalog
from omega3rb.algebra import format_scalar
from omega3rb.coeff import window
from omega3rb.constraints import even_tuples, odd_tuples, rb_core
from omega3rb.search import SearchSpace, completeness_report

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
SWEEP_RADIUS = 12


def odd_even_ok(fn, radius):
    """Weight-1, k=0 identity on all triples of [-radius, radius]^3 via
    the odd and even forms; f is total so targets may leave the window."""
    cache = {}

    def f(i):
        if i not in cache:
            cache[i] = fn(i)
        return cache[i]

    odds = [i for i in range(-radius, radius + 1) if i % 2]
    evens = [i for i in range(-radius, radius + 1) if i % 2 == 0]
    for a, b in itertools.combinations(odds, 2):
        for c in evens:
            if rb_core(f(a), f(b), f(c), f(a + b + c - 1)):
                return False
    for b, c in itertools.combinations(evens, 2):
        for a in odds:
            if rb_core(f(a), f(b), f(c), f(a + b + c - 1)):
                return False
    return True


def freeze_sufficiency():
    rows = []
    for cid in catalog.CASES:
        case = catalog.get_case(cid)
        for params in catalog.PARAMETER_FIXTURE[cid]:
            for reading, spec in case.readings.items():
                p = catalog._coerce_params(case, params)
                try:
                    catalog.validate(case, p, reading)
                except catalog.ValidationError:
                    outcome = "invalid"
                else:
                    outcome = "pass" if odd_even_ok(spec.builder(p), SWEEP_RADIUS) else "fail"
                rows.append({"case": cid, "params": {k: str(v) for k, v in params.items()},
                             "reading": reading, "outcome": outcome})
    return {"window": [-SWEEP_RADIUS, SWEEP_RADIUS], "weight": "1", "k": 0, "rows": rows}


def freeze_overlaps():
    """Groups of fixture families (any valid reading) with equal window tables."""
    w = window(SWEEP_RADIUS)
    groups = {}
    for cid in catalog.CASES:
        for params, built in catalog.fixture_families(cid):
            for reading, fam in built.items():
                if fam is None:
                    continue
                key = tuple(fam(i) for i in range(w[0], w[1] + 1))
                label = f"{cid}[{reading}]" + ("" if not params else " " + fam.params_text())
                groups.setdefault(key, []).append(label)
    overlaps = sorted(sorted(g) for g in groups.values() if len({x.split("[")[0] + x.split("]")[1] for x in g}) > 1)
    return {"window": list(w), "overlaps": overlaps}


def brute_force_tables(radius, values):
    w = window(radius)
    instances = [(2 * l + 1, 2 * m + 1, 2 * n) for l, m, n in odd_tuples(w)]
    instances += [(2 * l + 1, 2 * m, 2 * n) for l, m, n in even_tuples(w)]
    idx = list(range(-radius, radius + 1))
    found = []
    for seq in itertools.product(values, repeat=len(idx)):
        f = dict(zip(idx, seq))
        if all(rb_core(f[a], f[b], f[c], f[a + b + c - 1]) == 0 for a, b, c in instances):
            found.append([format_scalar(v) for v in seq])
    return sorted(found)


def freeze_completeness():
    radius, values, margin = 5, (0, -1), 2
    tables = brute_force_tables(radius, values)
    rep = completeness_report(SearchSpace(radius, [str(v) for v in values]), margin, workers=1)
    return {
        "window": [-radius, radius],
        "values": [str(v) for v in values],
        "k": 0,
        "weight": "1",
        "margin": margin,
        "solution_count": len(tables),
        "solutions": tables,
        "unexplained": len(rep.unexplained),
        "unexplained_tables": sorted([format_scalar(v) for v in e.solution.table.as_tuple()]
                                     for e in rep.unexplained),
        "explained_by_case": rep.counts(),
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, fn in (("sufficiency", freeze_sufficiency), ("completeness", freeze_completeness),
                     ("overlaps", freeze_overlaps)):
        t = time.time()
        data = fn()
        (OUT / f"{name}.json").write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
        print(f"{name}: {time.time() - t:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()

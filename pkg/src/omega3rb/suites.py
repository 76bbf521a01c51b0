"""Named identity suites run by ``omega3rb identities``.

Each suite returns a JSON-ready body with a ``passed`` flag, counts and up
to ``MAX_WITNESSES`` failing instances.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional

from .algebra import L, det3, det3_vanishes_closed_form, format_scalar, fundamental_identity_residual
from .coeff import Window, window, window_range
from .constraints import (
    DENSITY_NOTE,
    PreconditionError,
    cor01_report,
    eq00_residual,
    eq01_residual,
    eq39_residual,
    extract_supporters,
    klmn_nonvanishing_report,
    lemma_f00_residuals,
    MSupporter,
)
from .report import MAX_WITNESSES

SUITES = ("fundamental", "det-criterion", "derived-a-branch", "derived-01-branch")


class _Tally:
    def __init__(self):
        self.checked = 0
        self.skipped = 0
        self.failed = 0
        self.witnesses: List[dict] = []

    def ok(self):
        self.checked += 1

    def fail(self, witness: dict):
        self.checked += 1
        self.failed += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def check(self, value, witness: dict):
        if value:
            self.fail({**witness, "residual": format_scalar(value)})
        else:
            self.ok()

    def to_json(self) -> dict:
        return {
            "passed": self.failed == 0,
            "counts": {"checked": self.checked, "skipped": self.skipped, "failed": self.failed},
            "witnesses": self.witnesses,
        }


def fundamental(radius: int, trials: int, seed: int) -> dict:
    """Fundamental identity on seeded random generator quintuples."""
    rng = random.Random(seed)
    t = _Tally()
    for _ in range(trials):
        idx = [rng.randint(-radius, radius) for _ in range(5)]
        res = fundamental_identity_residual(*(L(i) for i in idx))
        if res:
            t.fail({"indices": idx, "residual": str(res)})
        else:
            t.ok()
    return {"suite": "fundamental", "window": [-radius, radius], "trials": trials, "seed": seed, **t.to_json()}


def det_criterion(radius: int) -> dict:
    t = _Tally()
    r = range(-radius, radius + 1)
    for l, m, n in product(r, r, r):
        if (det3(l, m, n) == 0) == det3_vanishes_closed_form(l, m, n):
            t.ok()
        else:
            t.fail({"triple": [l, m, n], "det": format_scalar(det3(l, m, n))})
    return {"suite": "det-criterion", "window": [-radius, radius], **t.to_json()}


def derived_a_branch(f, m0: int, a, radius: int, k_radius: int = 5, triple_radius: int = 3) -> dict:
    """Consequences of the f(0) = a != 0, f(0) + f(1) + 1 = 0 branch."""
    a = Fraction(a)
    w = window(radius)
    parts: Dict[str, dict] = {}

    t = _Tally()
    for m in window_range(w):
        t.check(eq39_residual(f, m), {"m": m})
    parts["f(1-m)+f(m)+1"] = t.to_json()

    t = _Tally()
    for k in range(-k_radius, k_radius + 1):
        if k == 0:
            continue
        try:
            t.check(eq00_residual(f, m0, k, a), {"k": k})
        except PreconditionError:
            t.skipped += 1
    parts["reciprocal sum"] = t.to_json()

    t = _Tally()
    r = range(-triple_radius, triple_radius + 1)
    for k1, k2, k3 in product(r, r, r):
        try:
            t.check(eq01_residual(f, m0, k1, k2, k3), {"k": [k1, k2, k3]})
        except PreconditionError:
            t.skipped += 1
    parts["reciprocal balance"] = t.to_json()

    klmn = klmn_nonvanishing_report(f, w)
    parts["nonvanishing"] = klmn.to_json()

    sup = extract_supporters(f, w)
    expected = [i for i in MSupporter(m0).within(w) if i not in (0, 1)]
    parts["supporters"] = {
        "passed": list(sup.support()) == expected,
        "extracted": sup.to_json(),
        "expected": expected,
    }
    return {
        "suite": "derived-a-branch",
        "window": list(w),
        "passed": all(p["passed"] for p in parts.values()),
        "parts": parts,
        "approximation_notes": [DENSITY_NOTE],
    }


def derived_01_branch(f, radius: int) -> dict:
    """Consequences of the f(0) = 0, f(1) = -1 branch."""
    w = window(radius)
    t = _Tally()
    # lemma variables are half-indices: 2l+2m+1 stays near the window
    r = range(-(radius // 2), radius // 2 + 1)
    for l, m, n in product(r, r, r):
        for item, value in enumerate(lemma_f00_residuals(f, l, m, n), start=1):
            if value is None:
                t.skipped += 1
            else:
                t.check(value, {"item": item, "lmn": [l, m, n]})
    cor = cor01_report(f, w)
    return {
        "suite": "derived-01-branch",
        "window": list(w),
        "passed": t.failed == 0 and cor.passed,
        "parts": {"products": t.to_json(), "implications": cor.to_json()},
        "approximation_notes": [DENSITY_NOTE],
    }


def run(suite: str, radius: int, trials: int = 1000, seed: int = 0, family=None) -> dict:
    if suite == "fundamental":
        return fundamental(radius, trials, seed)
    if suite == "det-criterion":
        return det_criterion(radius)
    if suite in ("derived-a-branch", "derived-01-branch"):
        if family is None:
            raise ValueError(f"suite {suite} needs --case and --params")
        if suite == "derived-01-branch":
            return derived_01_branch(family, radius)
        p = family.params
        if "m0" not in p or "a" not in p:
            raise ValueError(f"suite {suite} needs a family with parameters a and m0")
        return derived_a_branch(family, p["m0"], p["a"], radius)
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")

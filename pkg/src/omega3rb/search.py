"""Exhaustive enumeration of coefficient tables on a finite window.

A table on ``[-N, N]`` is a solution when every constraint instance whose
indices all lie in the window has zero residual.  For k = 0 and weight 1
the instances are the odd/even functional equations; otherwise each
generator triple (l, m, n) with every required index in the window is one
instance, checked through the hand-expanded residual.  Instances that
would need an index outside the window are skipped and counted, so window
solutions over-approximate restrictions of genuine operators.

The search assigns indices in a greedy static order (most newly completed
instances first) and prunes on the first nonzero residual.  The tree is
split on a prefix of that order for parallel workers; the merged solution
list is sorted, so output does not depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import catalog
from .algebra import _det, _norm, format_scalar, parse_scalar
from .coeff import Table, Window, window_range
from .constraints import even_tuples, odd_tuples
from .operator import required_indices, rb_residual_expanded

DEFAULT_BUDGET = 2 ** 24
WORKERS_ENV = "OMEGA3RB_WORKERS"


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"search needs {required} candidate tables, budget is {budget}")


@dataclass(frozen=True)
class SearchSpace:
    radius: int
    values: Tuple[Fraction, ...]
    k: int = 0
    weight: Fraction = Fraction(1)
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("window radius must be >= 0")
        vals = tuple(sorted({parse_scalar(v) for v in self.values}))
        if not vals:
            raise ValueError("value set is empty")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "weight", parse_scalar(self.weight))

    @property
    def window(self) -> Window:
        return (-self.radius, self.radius)

    @property
    def size(self) -> int:
        return len(self.values) ** (2 * self.radius + 1)

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "values": [format_scalar(v) for v in self.values],
            "k": self.k,
            "weight": format_scalar(self.weight),
            "budget": self.budget,
            "nominal_size": self.size,
        }


@dataclass
class Solution:
    table: Table
    checked_triples: int
    skipped_triples: int

    def to_json(self) -> dict:
        return {
            "table": self.table.to_json(),
            "checked_triples": self.checked_triples,
            "skipped_triples": self.skipped_triples,
        }


# -- constraint instances ----------------------------------------------------------

@dataclass
class _Instances:
    kind: str                      # "core" or "general"
    items: List[tuple]
    skipped: int
    reachable: Tuple[int, ...] = ()


def _core_instances(w: Window) -> _Instances:
    lo, hi = w
    seen = set()
    items = []
    for l, m, n in odd_tuples(w):
        a, b = 2 * l + 1, 2 * m + 1
        key = (min(a, b), max(a, b), 2 * n, 2 * l + 2 * m + 2 * n + 1)
        if key not in seen:
            seen.add(key)
            items.append(key)
    for l, m, n in even_tuples(w):
        b, c = 2 * m, 2 * n
        key = (2 * l + 1, min(b, c), max(b, c), 2 * l + 2 * m + 2 * n)
        if key not in seen:
            seen.add(key)
            items.append(key)
    # skipped: inputs in the window, target outside
    skipped = 0
    evens = [i for i in window_range(w) if i % 2 == 0]
    odds = [i for i in window_range(w) if i % 2]
    for a, b in product(odds, repeat=2):
        if a < b:
            skipped += sum(1 for c in evens if not lo <= a + b + c - 1 <= hi)
    for b, c in product(evens, repeat=2):
        if b < c:
            skipped += sum(1 for a in odds if not lo <= a + b + c - 1 <= hi)
    return _Instances("core", items, skipped)


def _general_instances(w: Window, k: int) -> _Instances:
    lo, hi = w
    shifted = range(lo - k, hi - k + 1)
    items = []
    skipped = 0
    reachable = set()
    for l in shifted:
        for m in shifted:
            if m <= l:
                continue
            for n in shifted:
                if n <= m:
                    continue
                req = required_indices(k, (l, m, n))
                if all(lo <= i <= hi for i in req):
                    items.append((l, m, n))
                    if _det(l, m, n):
                        reachable.add(l + m + n + k - 1)
                else:
                    skipped += 1
    return _Instances("general", items, skipped, tuple(sorted(reachable)))


def _instance_indices(inst: _Instances, item: tuple, k: int) -> Tuple[int, ...]:
    if inst.kind == "core":
        return item
    return required_indices(k, item)


def _greedy_order(indices: Sequence[int], refs: List[frozenset]) -> List[int]:
    remaining = set(indices)
    assigned: set = set()
    pending = [set(r) for r in refs]
    order = []
    while remaining:
        best, best_score = None, None
        for i in sorted(remaining, key=lambda v: (abs(v), v)):
            score = sum(1 for p in pending if p and p <= assigned | {i})
            if best_score is None or score > best_score:
                best, best_score = i, score
        order.append(best)
        remaining.discard(best)
        assigned.add(best)
        pending = [p for p in pending if not p <= assigned]
    return order


class _Plan:
    """Static order plus, per depth, the instances completed at that depth."""

    def __init__(self, space: SearchSpace):
        self.space = space
        w = space.window
        core = space.k == 0 and space.weight == 1
        self.inst = _core_instances(w) if core else _general_instances(w, space.k)
        idx = list(window_range(w))
        refs = [frozenset(_instance_indices(self.inst, it, space.k)) for it in self.inst.items]
        self.order = _greedy_order(idx, refs)
        pos = {i: d for d, i in enumerate(self.order)}
        self.checks: List[List[tuple]] = [[] for _ in self.order]
        for it, r in zip(self.inst.items, refs):
            self.checks[max(pos[i] for i in r)].append(it)
        self.values = [_norm(v) for v in space.values]

    def _ok(self, f: dict, depth: int) -> bool:
        if self.inst.kind == "core":
            for a, b, c, t in self.checks[depth]:
                x, y, z, v = f[a], f[b], f[c], f[t]
                if x * y * z != (x * y + x * z + y * z + x + y + z + 1) * v:
                    return False
            return True
        k, lam = self.space.k, self.space.weight
        get = f.__getitem__
        for l, m, n in self.checks[depth]:
            if rb_residual_expanded(get, k, lam, l, m, n):
                return False
        return True

    def run(self, prefix: Tuple = ()) -> List[Tuple]:
        """All solutions extending ``prefix`` (values along ``order``)."""
        order, values = self.order, self.values
        f: dict = {}
        for d, v in enumerate(prefix):
            f[order[d]] = v
            if not self._ok(f, d):
                return []
        out = []
        depth0 = len(prefix)
        total = len(order)

        def dfs(d: int) -> None:
            if d == total:
                out.append(tuple(f[i] for i in sorted(f)))
                return
            i = order[d]
            for v in values:
                f[i] = v
                if self._ok(f, d):
                    dfs(d + 1)
            del f[i]

        dfs(depth0)
        return out

    def prefixes(self, depth: int) -> List[Tuple]:
        out = [()]
        for _ in range(depth):
            out = [p + (v,) for p in out for v in self.values]
        return out


_PLAN: Optional[_Plan] = None


def _worker_init(space: SearchSpace) -> None:
    global _PLAN
    _PLAN = _Plan(space)


def _worker_run(prefix: Tuple) -> List[Tuple]:
    return _PLAN.run(prefix)


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1


def enumerate_solutions(space: SearchSpace, workers: Optional[int] = None) -> List[Solution]:
    """Every window table satisfying all fully-in-window constraint instances,
    sorted lexicographically by the table values (ascending index)."""
    if space.size > space.budget:
        raise BudgetExceeded(space.size, space.budget)
    workers = default_workers() if workers is None else max(1, workers)
    plan = _Plan(space)
    if workers == 1:
        rows = plan.run()
    else:
        depth = 0
        while len(space.values) ** depth < 4 * workers and depth < len(plan.order):
            depth += 1
        rows = []
        with ProcessPoolExecutor(workers, initializer=_worker_init, initargs=(space,)) as pool:
            for part in pool.map(_worker_run, plan.prefixes(depth)):
                rows.extend(part)
    rows.sort()
    w = space.window
    checked = len(plan.inst.items)
    return [Solution(Table.from_sequence(w, r), checked, plan.inst.skipped) for r in rows]


def reachable_indices(space: SearchSpace) -> Tuple[int, ...]:
    """Indices l+m+n+k-1 with D(l, m, n) != 0 over the in-window instances (k != 0)."""
    if space.k == 0:
        return ()
    return _general_instances(space.window, space.k).reachable


# -- explanation against the catalog -------------------------------------------------

@dataclass
class Match:
    case: str
    reading: str
    params: Dict[str, object]

    def to_json(self) -> dict:
        return {"case": self.case, "reading": self.reading,
                "params": {k: v if isinstance(v, int) else format_scalar(v) for k, v in self.params.items()}}


@dataclass
class Explanation:
    solution: Solution
    inner: Window
    matches: List[Match]

    @property
    def unexplained(self) -> bool:
        return not self.matches

    def to_json(self) -> dict:
        return {
            "table": self.solution.table.to_json(),
            "inner_window": list(self.inner),
            "unexplained": self.unexplained,
            "matches": [m.to_json() for m in self.matches],
        }


_SAMPLE_SCALARS = (Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5))


def _inner_window(radius: int, margin: int) -> Window:
    if margin < 0:
        raise ValueError("inner margin must be >= 0")
    if margin > radius:
        raise ValueError("inner window is empty")
    return (-(radius - margin), radius - margin)


def _ints_admissible(constraints, ints: dict) -> bool:
    """False when some constraint fails on the integer parameters alone;
    constraints that read a scalar raise KeyError here and are deferred."""
    for c in constraints:
        try:
            if not c.check(ints):
                return False
        except KeyError:
            continue
    return True


class CatalogIndex:
    """Restrictions of every catalog family to an inner window, keyed by values.

    Integer parameters range over ``[-radius, radius]``.  A scalar parameter
    whose coefficient site lies in the inner window takes each candidate
    value (so a lookup reads it off the table); a site outside the inner
    window is invisible there and one valid sample stands in for it.
    """

    def __init__(self, radius: int, inner: Window, candidates: Iterable[Fraction]):
        self.radius = radius
        self.inner = inner
        self.candidates = tuple(sorted(set(Fraction(c) for c in candidates)))
        self._index: Dict[Tuple, List[Match]] = {}
        self._build()

    def _scalar_choices(self, case, ints: dict) -> Iterable[dict]:
        lo, hi = self.inner
        names = case.scalar_params
        pools = []
        for name in names:
            site = case.scalar_sites[name](ints)
            if lo <= site <= hi:
                pools.append([(c, True) for c in self.candidates])
            else:
                pools.append([(c, False) for c in _SAMPLE_SCALARS + self.candidates])
        for combo in product(*pools):
            yield {n: v for n, (v, _) in zip(names, combo)}, [seen for _, seen in combo]

    def _build(self) -> None:
        r = self.radius
        for case in catalog.CASES.values():
            for int_vals in product(range(-r, r + 1), repeat=len(case.int_params)):
                ints = dict(zip(case.int_params, int_vals))
                for reading in case.readings:
                    self._add_case(case, reading, ints)

    def _add_case(self, case, reading, ints) -> None:
        spec = case.readings[reading]
        if not _ints_admissible(spec.constraints, ints):
            return
        builder = spec.builder
        seen_hidden = set()
        for scalars, visible in self._scalar_choices(case, ints):
            params = {**ints, **scalars}
            try:
                catalog.validate(case, params, reading)
            except catalog.ValidationError:
                continue
            # hidden scalar sites only need one valid representative
            hidden_key = tuple(v for (n, v), vis in zip(scalars.items(), visible) if vis)
            if not all(visible):
                if hidden_key in seen_hidden:
                    continue
                seen_hidden.add(hidden_key)
            fn = builder(params)
            key = tuple(_norm(fn(i)) for i in window_range(self.inner))
            self._index.setdefault(key, []).append(Match(case.id, reading, params))

    def lookup(self, table: Table) -> List[Match]:
        key = tuple(_norm(table(i)) for i in window_range(self.inner))
        return list(self._index.get(key, []))


def explain(sol: Solution, inner_margin: int, index: Optional[CatalogIndex] = None) -> Explanation:
    w = sol.table.window
    radius = w[1]
    inner = _inner_window(radius, inner_margin)
    if index is None or index.inner != inner:
        values = set(sol.table.as_tuple())
        index = CatalogIndex(radius, inner, values)
    return Explanation(sol, inner, index.lookup(sol.table))


@dataclass
class CompletenessReport:
    space: SearchSpace
    margin: int
    solutions: List[Solution]
    explanations: List[Explanation]
    reachable: Tuple[int, ...] = ()

    @property
    def unexplained(self) -> List[Explanation]:
        return [e for e in self.explanations if e.unexplained]

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for e in self.explanations:
            for case in sorted({m.case for m in e.matches}):
                out[case] = out.get(case, 0) + 1
        return dict(sorted(out.items()))

    def nonzero_on_reachable(self) -> List[Solution]:
        return [s for s in self.solutions if any(s.table(i) for i in self.reachable)]

    def to_json(self) -> dict:
        body = {
            "space": self.space.to_json(),
            "inner_margin": self.margin,
            "solutions": len(self.solutions),
            "checked_instances": self.solutions[0].checked_triples if self.solutions else None,
            "skipped_instances": self.solutions[0].skipped_triples if self.solutions else None,
            "explained_per_case": self.counts(),
            "unexplained": [e.to_json() for e in self.unexplained],
        }
        if self.space.k != 0:
            body["reachable"] = list(self.reachable)
            body["nonzero_on_reachable"] = [s.table.to_json() for s in self.nonzero_on_reachable()]
        return body


def completeness_report(space: SearchSpace, inner_margin: int, workers: Optional[int] = None) -> CompletenessReport:
    inner = _inner_window(space.radius, inner_margin)
    solutions = enumerate_solutions(space, workers)
    index = CatalogIndex(space.radius, inner, space.values)
    explanations = [explain(s, inner_margin, index) for s in solutions]
    return CompletenessReport(space, inner_margin, solutions, explanations, reachable_indices(space))

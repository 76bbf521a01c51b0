"""k-order homogeneous operators and Rota-Baxter residuals.

A homogeneous operator of order k acts by ``R(L_m) = f(m+k) L_{m+k}``.
For weight ``lam`` the Rota-Baxter identity on a triple of generators is

    [Rx, Ry, Rz] = R([Rx, Ry, z] + [Rx, y, Rz] + [x, Ry, Rz]
                     + lam ([Rx, y, z] + [x, Ry, z] + [x, y, Rz])
                     + lam^2 [x, y, z])
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from .algebra import Element, ScalarLike, _det, _norm, bracket
from .coeff import Coeff, Func, UncoveredIndex, Window, window_range
from .report import ResidualReport

Triple = Tuple[int, int, int]


class InvalidWeight(ValueError):
    pass


class SkippedTriple(UncoveredIndex):
    """Raised when a residual needs a coefficient the table lacks."""

    def __init__(self, triple: Triple, index: int, w=None):
        super().__init__(index, w)
        self.triple = triple
        self.args = (f"triple {triple} needs uncovered index {index}",)


@dataclass(frozen=True)
class HomOp:
    k: int
    f: Coeff

    def __post_init__(self):
        if not isinstance(self.f, Coeff):
            object.__setattr__(self, "f", Func(self.f))


def apply(R: HomOp, x: Element) -> Element:
    """Linear extension of ``L_m -> f(m+k) L_{m+k}``."""
    k, f = R.k, R.f
    terms = {}
    for m, c in x._terms.items():
        v = _norm(f(m + k))
        if v:
            terms[m + k] = _norm(c * v)
    return Element._wrap(terms)


def required_indices(k: int, triple: Triple) -> Tuple[int, ...]:
    l, m, n = triple
    s = l + m + n
    return (l + k, m + k, n + k, s + 3 * k - 1, s + 2 * k - 1, s + k - 1)


def _accumulate(acc: dict, e: Element, scale=1) -> None:
    for i, c in e._terms.items():
        total = _norm(acc.get(i, 0) + c * scale)
        if total:
            acc[i] = total
        else:
            acc.pop(i, None)


def _residual(R: HomOp, lam, x, y, z, rx, ry, rz) -> Element:
    acc: dict = {}
    _accumulate(acc, bracket(rx, ry, z))
    _accumulate(acc, bracket(rx, y, rz))
    _accumulate(acc, bracket(x, ry, rz))
    if lam:
        _accumulate(acc, bracket(rx, y, z), lam)
        _accumulate(acc, bracket(x, ry, z), lam)
        _accumulate(acc, bracket(x, y, rz), lam)
        _accumulate(acc, bracket(x, y, z), lam * lam)
    return bracket(rx, ry, rz) - apply(R, Element._wrap(acc))


def rb_residual(R: HomOp, weight: ScalarLike, l: int, m: int, n: int) -> Element:
    """[Rx, Ry, Rz] - R(...) for x, y, z = L_l, L_m, L_n, built from apply/bracket.

    Raises ``SkippedTriple`` when a table-backed ``f`` does not cover an
    index the computation needs.
    """
    lam = _norm(Fraction(weight))
    x, y, z = Element.generator(l), Element.generator(m), Element.generator(n)
    try:
        return _residual(R, lam, x, y, z, apply(R, x), apply(R, y), apply(R, z))
    except SkippedTriple:
        raise
    except UncoveredIndex as exc:
        raise SkippedTriple((l, m, n), exc.index, exc.window) from None


def rb_residual_expanded(f, k: int, weight: ScalarLike, l: int, m: int, n: int) -> Dict[int, Fraction]:
    """Hand-expanded residual as ``{index: coefficient}``; zero entries dropped.

    Independent of ``apply``/``bracket``; used to cross-check
    ``rb_residual`` and as the fast path inside the search.
    """
    lam = Fraction(weight)
    s = l + m + n
    fl, fm, fn = f(l + k), f(m + k), f(n + k)
    out: Dict[int, Fraction] = {}

    def add(index: int, value) -> None:
        if value:
            out[index] = out.get(index, 0) + value

    t3 = s + 3 * k - 1
    d_all = _det(l + k, m + k, n + k)
    two = fm * fn * _det(l, m + k, n + k) + fl * fn * _det(l + k, m, n + k) + fl * fm * _det(l + k, m + k, n)
    if d_all and fl and fm and fn:
        add(t3, fl * fm * fn * d_all)
    if two:
        add(t3, -f(t3) * two)
    if lam:
        t2 = s + 2 * k - 1
        one = fl * _det(l + k, m, n) + fm * _det(l, m + k, n) + fn * _det(l, m, n + k)
        if one:
            add(t2, -lam * f(t2) * one)
        d0 = _det(l, m, n)
        if d0:
            t1 = s + k - 1
            add(t1, -lam * lam * f(t1) * d0)
    return {i: Fraction(v) for i, v in out.items() if v}


def rescale_weight(R: HomOp, weight: ScalarLike) -> HomOp:
    """``R / lam``: weight-lam RB iff the result is weight-1 RB."""
    lam = Fraction(weight)
    if lam == 0:
        raise InvalidWeight("weight must be nonzero to rescale")
    if lam == 1:
        return R
    return HomOp(R.k, R.f.scaled(1 / lam))


def window_triples(w: Window):
    r = window_range(w)
    return product(r, r, r)


class _Memo(Coeff):
    def __init__(self, f: Coeff):
        self._f = f
        self._cache: Dict[int, object] = {}

    def __call__(self, m: int):
        try:
            return self._cache[m]
        except KeyError:
            v = self._cache[m] = self._f(m)
            return v


def sweep(R: HomOp, weight: ScalarLike, w: Window, max_failures: Optional[int] = None) -> ResidualReport:
    """Check the RB identity on every triple of the window, in lexicographic order.

    With ``max_failures`` the sweep stops early once that many triples
    have failed; the report then says so in its notes.
    """
    report = ResidualReport(window=w)
    R = HomOp(R.k, _Memo(R.f))
    lam = _norm(Fraction(weight))
    # generators and their images, once per index; None marks an uncovered image
    gens, images = {}, {}
    for i in window_range(w):
        gens[i] = Element.generator(i)
        try:
            images[i] = apply(R, gens[i])
        except UncoveredIndex:
            images[i] = None
    for l, m, n in window_triples(w):
        if max_failures is not None and report.failed >= max_failures:
            report.notes.append(f"stopped after {max_failures} failing triple(s); counts are partial")
            break
        try:
            if images[l] is None or images[m] is None or images[n] is None:
                # re-run the plain path to name the missing index
                rb_residual(R, lam, l, m, n)
            res = _residual(R, lam, gens[l], gens[m], gens[n], images[l], images[m], images[n])
        except UncoveredIndex as exc:
            report.record_skip({"triple": [l, m, n], "index": exc.index})
            continue
        if res:
            report.record_failure({"triple": [l, m, n], "residual": str(res)})
        else:
            report.record_pass()
    return report


@dataclass
class KCollapseReport:
    k: int
    window: Window
    residuals: ResidualReport
    reachable: List[int] = field(default_factory=list)
    nonzero_on_reachable: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.residuals.passed and not self.nonzero_on_reachable

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "k": self.k,
            "residuals": self.residuals.to_json(),
            "reachable": self.reachable,
            "nonzero_on_reachable": self.nonzero_on_reachable,
        }


def check_k_collapse(R: HomOp, w: Window) -> KCollapseReport:
    """For k != 0: vanishing residuals must force f = 0 on every index
    l+m+n+k-1 with D(l, m, n) != 0 over the window triples."""
    if R.k == 0:
        raise ValueError("check_k_collapse requires k != 0")
    residuals = sweep(R, 1, w)
    reachable = set()
    for l, m, n in window_triples(w):
        if _det(l, m, n):
            reachable.add(l + m + n + R.k - 1)
    nonzero = []
    for t in sorted(reachable):
        try:
            if R.f(t):
                nonzero.append(t)
        except UncoveredIndex:
            residuals.record_skip({"index": t})
    return KCollapseReport(R.k, w, residuals, sorted(reachable), nonzero)


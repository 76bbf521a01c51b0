"""Scalar residuals of the functional equations satisfied by f (k = 0, weight 1).

Every residual is the signed difference LHS - RHS as an exact scalar.
Side conditions are enforced exactly: calling a residual on a tuple that
violates one raises ``ValueError``; the window sweeps simply skip such
tuples rather than counting them as passes.

Coefficient lookups outside a table's window propagate ``UncoveredIndex``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from .algebra import format_scalar
from .coeff import UncoveredIndex, Window, window_range

F = Callable[[int], Fraction]

DENSITY_NOTE = (
    "infinite-cardinality hypotheses are approximated by window density "
    "(nonempty in both halves of the window); they are reported, never gated"
)


class PreconditionError(ValueError):
    pass


def rb_core(x, y, z, w) -> Fraction:
    """xyz - (xy + xz + yz + x + y + z + 1) w."""
    return x * y * z - (x * y + x * z + y * z + x + y + z + 1) * w


def odd_residual(f: F, l: int, m: int, n: int) -> Fraction:
    """Two odd generators 2l+1, 2m+1 and one even 2n."""
    if l == m:
        raise PreconditionError("odd_residual requires l != m")
    return rb_core(f(2 * l + 1), f(2 * m + 1), f(2 * n), f(2 * l + 2 * m + 2 * n + 1))


def even_residual(f: F, l: int, m: int, n: int) -> Fraction:
    """One odd generator 2l+1 and two evens 2m, 2n."""
    if m == n:
        raise PreconditionError("even_residual requires m != n")
    return rb_core(f(2 * l + 1), f(2 * m), f(2 * n), f(2 * l + 2 * m + 2 * n))


def eq37_residual(f: F, m: int) -> Fraction:
    """(f(0) + f(1) + 1) f(m) (f(m) + 1)."""
    if m in (0, 1):
        raise PreconditionError("eq37_residual requires m not in {0, 1}")
    fm = f(m)
    return (f(0) + f(1) + 1) * fm * (fm + 1)


def _require_a_branch(f: F, a: Fraction) -> None:
    if f(0) != a or f(1) != -1 - a:
        raise PreconditionError(
            f"requires f(0) = a and f(1) = -1 - a; got f(0) = {format_scalar(f(0))}, "
            f"f(1) = {format_scalar(f(1))}, a = {format_scalar(a)}"
        )


def lemma_fa_residuals(f: F, a, l: int, m: int, n: int) -> Tuple[Optional[Fraction], ...]:
    """The four specialised identities of the f(0) = a branch.

    Items whose own side condition fails (1: l != m, 2: m != 0, 3: m != 0,
    4: m != n) are returned as None.
    """
    a = Fraction(a)
    _require_a_branch(f, a)
    b = a + 1
    out: List[Optional[Fraction]] = [None, None, None, None]
    if l != m:
        x, y = f(2 * l + 1), f(2 * m + 1)
        out[0] = a * x * y - (b * x + b * y + x * y + b) * f(2 * l + 2 * m + 1)
    if m != 0:
        y, z = f(2 * m + 1), f(2 * n)
        out[1] = -b * y * z - (-a * y - a * z + y * z - a) * f(2 * m + 2 * n + 1)
        x, y = f(2 * l + 1), f(2 * m)
        out[2] = a * x * y - (b * x + b * y + x * y + b) * f(2 * l + 2 * m)
    if m != n:
        y, z = f(2 * m), f(2 * n)
        out[3] = -b * y * z - (-a * y - a * z + y * z - a) * f(2 * m + 2 * n)
    return tuple(out)


def eq39_residual(f: F, m: int) -> Fraction:
    """f(1 - m) + f(m) + 1."""
    return f(1 - m) + f(m) + 1


def _inv_sum(x: Fraction, y: Fraction) -> Fraction:
    return 1 / x + 1 / y + 1 / (x * y)


def eq00_residual(f: F, m0: int, k: int, a) -> Fraction:
    """1/f(2m0k) + 1/f(-2m0k) + 1/(f(2m0k) f(-2m0k)) - (1+2a)/a^2."""
    a = Fraction(a)
    if a == 0 or k == 0:
        raise PreconditionError("eq00_residual requires a != 0 and k != 0")
    x, y = f(2 * m0 * k), f(-2 * m0 * k)
    if x == 0 or y == 0:
        raise PreconditionError(f"eq00_residual requires f(+-{2 * m0 * k}) != 0")
    return _inv_sum(x, y) - (1 + 2 * a) / (a * a)


def eq01_residual(f: F, m0: int, k1: int, k2: int, k3: int) -> Fraction:
    if k2 == k3:
        raise PreconditionError("eq01_residual requires k2 != k3")
    p = f(2 * m0 * k1)
    q = f(2 * m0 * (-k1 + k2 + k3))
    r = f(2 * m0 * k2)
    s = f(2 * m0 * k3)
    if 0 in (p, q, r, s):
        raise PreconditionError("eq01_residual requires all four coefficients nonzero")
    return _inv_sum(p, q) - _inv_sum(r, s)


@dataclass
class Violation:
    item: int
    args: Tuple[int, ...]
    detail: str

    def to_json(self) -> dict:
        return {"item": self.item, "args": list(self.args), "detail": self.detail}


@dataclass
class ItemReport:
    """Outcome of checking a numbered list of implications over a window."""

    window: Window
    checked: Dict[int, int] = field(default_factory=dict)
    skipped: int = 0
    violations: List[Violation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    density: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def count(self, item: int) -> None:
        self.checked[item] = self.checked.get(item, 0) + 1

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "window": list(self.window),
            "checked": {str(k): v for k, v in sorted(self.checked.items())},
            "skipped": self.skipped,
            "violations": [v.to_json() for v in self.violations],
            "density": self.density,
            "approximation_notes": self.notes,
        }


def _nonzero_indices(w: Window) -> List[int]:
    return [i for i in window_range(w) if i != 0]


def klmn_nonvanishing_report(f: F, w: Window) -> ItemReport:
    """Nonvanishing consequences in the f(0) = a != 0 branch.

    Variables k, l, m, n range over the nonzero integers of ``w``; each item
    is checked on every tuple of the variables it mentions that meets the
    hypotheses f(2k), f(2l), f(2m+1), f(2n+1) != 0.
    """
    a = f(0)
    if a == 0 or a + f(1) + 1 != 0:
        raise PreconditionError("klmn report requires f(0) = a != 0 and f(0) + f(1) + 1 = 0")
    rep = ItemReport(window=w, notes=["variables range over the window only"])
    idx = _nonzero_indices(w)
    even_ok = {}
    odd_ok = {}
    for v in idx:
        try:
            even_ok[v] = f(2 * v) != 0
            odd_ok[v] = f(2 * v + 1) != 0
        except UncoveredIndex:
            even_ok[v] = odd_ok[v] = False
            rep.skipped += 1
    evens = [v for v in idx if even_ok[v]]
    odds = [v for v in idx if odd_ok[v]]

    def check(item: int, args: Tuple[int, ...], index: int, plus_one: bool = False) -> None:
        try:
            value = f(index) + (1 if plus_one else 0)
        except UncoveredIndex:
            rep.skipped += 1
            return
        rep.count(item)
        if value == 0:
            what = f"f({index}) + 1 = 0" if plus_one else f"f({index}) = 0"
            rep.violations.append(Violation(item, args, what))

    for k, l in product(evens, evens):
        check(1, (k, l), 2 * k + 2 * l)
    for k, m in product(evens, odds):
        check(2, (k, m), 2 * k + 2 * m)
        check(3, (k, m), 2 * k + 2 * m + 1)
        if m != -k:
            check(7, (k, m), 1 - 2 * k + 2 * m)
        check(9, (k, m), 1 - 2 * k - 2 * m, plus_one=True)
        check(10, (k, m), 2 * k - 2 * m, plus_one=True)
    for m, n in product(odds, odds):
        check(4, (m, n), 2 * m + 2 * n + 1)
    for m, n, k in product(odds, odds, evens):
        check(5, (m, n, k), 2 * m + 2 * n + 2 * k + 1)
    for m, k, l in product(odds, evens, evens):
        check(6, (m, k, l), 2 * m + 2 * k + 2 * l)
    for k in evens:
        check(8, (k,), 4 * k)
        check(11, (k,), 1 - 4 * k, plus_one=True)
    return rep


def _require_01_branch(f: F) -> None:
    if f(0) != 0 or f(1) != -1:
        raise PreconditionError("requires f(0) = 0 and f(1) = -1")


def lemma_f00_residuals(f: F, l: int, m: int, n: int) -> Tuple[Optional[Fraction], ...]:
    """Four products that vanish when f(0) = 0, f(1) = -1.

    Items whose side condition fails (1: l != m, 2: m != 0, 3: m != 0,
    4: m != n) are None.
    """
    _require_01_branch(f)
    out: List[Optional[Fraction]] = [None, None, None, None]
    if l != m:
        out[0] = (f(2 * l + 1) + 1) * (f(2 * m + 1) + 1) * f(2 * l + 2 * m + 1)
    if m != 0:
        out[1] = f(2 * m + 1) * f(2 * n) * (1 + f(2 * m + 2 * n + 1))
        out[2] = (f(2 * l + 1) + 1) * (f(2 * m) + 1) * f(2 * l + 2 * m)
    if m != n:
        out[3] = f(2 * m) * f(2 * n) * (1 + f(2 * m + 2 * n))
    return tuple(out)


def cor01_report(f: F, w: Window) -> ItemReport:
    """Implications 1-6 of the f(0) = 0, f(1) = -1 branch over the window;
    item 7 (infinitely many zero evens / nonzero odds) is density-only."""
    _require_01_branch(f)
    rep = ItemReport(window=w, notes=[DENSITY_NOTE, "variables range over the window only"])
    idx = _nonzero_indices(w)

    def val(i: int) -> Optional[Fraction]:
        try:
            return f(i)
        except UncoveredIndex:
            rep.skipped += 1
            return None

    def expect(item: int, args, index: int, want: Fraction) -> None:
        v = val(index)
        if v is None:
            return
        rep.count(item)
        if v != want:
            rep.violations.append(Violation(item, tuple(args), f"f({index}) = {format_scalar(v)}, expected {format_scalar(want)}"))

    for k, l in product(idx, idx):
        if k != l and k != -l:
            a, b = val(2 * k), val(2 * l)
            if a and b:
                expect(1, (k, l), 2 * k + 2 * l, Fraction(-1))
    for k, m in product(idx, idx):
        a, b = val(2 * k), val(2 * m + 1)
        if a and b:
            expect(2, (k, m), 2 * k + 2 * m + 1, Fraction(-1))
    for k, n in product(idx, idx):
        a, b = val(2 * k), val(2 * n + 1)
        if a == 0 and b == 0:
            expect(3, (k, n), 2 * k + 2 * n, Fraction(0))
    for m, n in product(idx, idx):
        if m != n and m != -n:
            a, b = val(2 * m + 1), val(2 * n + 1)
            if a == 0 and b == 0:
                expect(4, (m, n), 2 * m + 2 * n + 1, Fraction(0))
    for k in idx:
        a, b = val(2 * k), val(-2 * k)
        if a is None or b is None:
            continue
        rep.count(5)
        if a * b != 0:
            rep.violations.append(Violation(5, (k,), f"f({2 * k}) f({-2 * k}) = {format_scalar(a * b)}"))
    for m in window_range(w):
        a, b = val(2 * m + 1), val(-2 * m + 1)
        if a is None or b is None:
            continue
        rep.count(6)
        if (a + 1) * (b + 1) != 0:
            rep.violations.append(Violation(6, (m,), f"(f({2 * m + 1})+1)(f({-2 * m + 1})+1) = {format_scalar((a + 1) * (b + 1))}"))
    sup = extract_supporters(f, w)
    rep.density = {"W2_dense": sup.dense("W2"), "U1_dense": sup.dense("U1")}
    return rep


@dataclass
class SupporterSets:
    """Nonzero/zero supporter sets of f restricted to a window.

    ``W1``/``W2``: nonzero even indices where f is nonzero/zero.
    ``U1``/``U2``: odd indices other than 1 where f is nonzero/zero.
    Sets are stored as sorted tuples, which double as the ordered views.
    """

    window: Window
    W1: Tuple[int, ...]
    W2: Tuple[int, ...]
    U1: Tuple[int, ...]
    U2: Tuple[int, ...]
    uncovered: Tuple[int, ...] = ()

    def dense(self, name: str) -> bool:
        values = getattr(self, name)
        return any(v < 0 for v in values) and any(v > 0 for v in values)

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.W1 + self.U1))

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "W1": list(self.W1), "W2": list(self.W2),
            "U1": list(self.U1), "U2": list(self.U2),
            "density": {n: self.dense(n) for n in ("W1", "W2", "U1", "U2")},
            "approximation_notes": [DENSITY_NOTE],
        }


def extract_supporters(f: F, w: Window) -> SupporterSets:
    sets: Dict[str, List[int]] = {"W1": [], "W2": [], "U1": [], "U2": []}
    uncovered = []
    for i in window_range(w):
        if i in (0, 1):
            continue
        try:
            nz = f(i) != 0
        except UncoveredIndex:
            uncovered.append(i)
            continue
        if i % 2 == 0:
            sets["W1" if nz else "W2"].append(i)
        else:
            sets["U1" if nz else "U2"].append(i)
    return SupporterSets(w, *(tuple(sets[k]) for k in ("W1", "W2", "U1", "U2")), uncovered=tuple(uncovered))


@dataclass(frozen=True)
class MSupporter:
    """{2 m0 k : k != 0} together with {2 m0 k + 1 : k in Z}."""

    m0: int

    def __post_init__(self):
        if self.m0 == 0:
            raise ValueError("m0 must be nonzero")

    def __contains__(self, i: int) -> bool:
        step = 2 * self.m0
        if i % 2 == 0:
            return i != 0 and i % step == 0
        return (i - 1) % step == 0

    def within(self, w: Window) -> Tuple[int, ...]:
        return tuple(i for i in window_range(w) if i in self)


def supporters_match(f: F, m0: int, w: Window) -> bool:
    """W1 u U1 on the window equals the m0-supporter away from 0 and 1."""
    sup = extract_supporters(f, w)
    expected = tuple(i for i in MSupporter(m0).within(w) if i not in (0, 1))
    return sup.support() == expected


def odd_tuples(w: Window):
    """(l, m, n) with l != m and every index of the odd identity inside w."""
    lo, hi = w
    for l, m in product(range(-(-(lo - 1) // 2), (hi - 1) // 2 + 1), repeat=2):
        if l == m:
            continue
        for n in range(-(-lo // 2), hi // 2 + 1):
            t = 2 * l + 2 * m + 2 * n + 1
            if lo <= t <= hi:
                yield l, m, n


def even_tuples(w: Window):
    lo, hi = w
    for l in range(-(-(lo - 1) // 2), (hi - 1) // 2 + 1):
        for m, n in product(range(-(-lo // 2), hi // 2 + 1), repeat=2):
            if m == n:
                continue
            t = 2 * l + 2 * m + 2 * n
            if lo <= t <= hi:
                yield l, m, n

"""Coefficient maps f: Z -> F.

A coefficient map is anything callable on an integer returning a
``Fraction``.  ``Table`` is defined on a finite window only and raises
``UncoveredIndex`` outside it; catalog families (see ``catalog``) are
total.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from .algebra import ScalarLike, format_scalar

Window = Tuple[int, int]


class UncoveredIndex(LookupError):
    """A table-backed coefficient map was asked for an index it lacks."""

    def __init__(self, index: int, window: Optional[Window] = None):
        self.index = index
        self.window = window
        where = f" outside window [{window[0]}, {window[1]}]" if window else ""
        super().__init__(f"uncovered index {index}{where}")


def window(radius: int) -> Window:
    return (-radius, radius)


def window_range(w: Window) -> range:
    return range(w[0], w[1] + 1)


class Coeff:
    """Base class for coefficient maps; subclasses implement ``__call__``."""

    def __call__(self, m: int) -> Fraction:  # pragma: no cover - abstract
        raise NotImplementedError

    def covers(self, m: int) -> bool:
        return True

    def restrict(self, w: Window) -> "Table":
        return Table({m: self(m) for m in window_range(w)}, w)

    def scaled(self, factor: ScalarLike) -> "Coeff":
        return Scaled(self, Fraction(factor))


class Func(Coeff):
    """Wrap a plain Python callable as a total coefficient map."""

    def __init__(self, fn: Callable[[int], ScalarLike], label: str = "func"):
        self._fn = fn
        self.label = label

    def __call__(self, m: int) -> Fraction:
        return Fraction(self._fn(m))

    def __repr__(self) -> str:
        return f"Func({self.label})"


def constant(c: ScalarLike) -> Func:
    c = Fraction(c)
    return Func(lambda m: c, label=f"const {format_scalar(c)}")


def sparse(values: Mapping[int, ScalarLike], default: ScalarLike = 0) -> Func:
    """Total map equal to ``default`` except at the listed indices."""
    vals = {int(k): Fraction(v) for k, v in values.items()}
    d = Fraction(default)
    return Func(lambda m: vals.get(m, d), label=f"sparse {sorted(vals.items())}")


class Scaled(Coeff):
    def __init__(self, base: Coeff, factor: Fraction):
        self.base = base
        self.factor = factor

    def __call__(self, m: int) -> Fraction:
        return self.base(m) * self.factor

    def covers(self, m: int) -> bool:
        return self.base.covers(m)

    def __repr__(self) -> str:
        return f"Scaled({self.base!r}, {format_scalar(self.factor)})"


class Table(Coeff):
    """Explicit finite table on a window ``[lo, hi]``."""

    def __init__(self, values: Mapping[int, ScalarLike], w: Optional[Window] = None):
        vals: Dict[int, Fraction] = {int(k): Fraction(v) for k, v in values.items()}
        if w is None:
            w = (min(vals), max(vals)) if vals else (0, -1)
        missing = [m for m in window_range(w) if m not in vals]
        if missing:
            raise ValueError(f"table does not cover its window; missing {missing}")
        self.window = w
        self.values = vals

    @classmethod
    def from_sequence(cls, w: Window, seq: Iterable[ScalarLike]) -> "Table":
        seq = list(seq)
        if len(seq) != w[1] - w[0] + 1:
            raise ValueError("sequence length does not match window")
        return cls(dict(zip(window_range(w), seq)), w)

    def __call__(self, m: int) -> Fraction:
        if not self.window[0] <= m <= self.window[1]:
            raise UncoveredIndex(m, self.window)
        return self.values[m]

    def covers(self, m: int) -> bool:
        return self.window[0] <= m <= self.window[1]

    def as_tuple(self) -> Tuple[Fraction, ...]:
        return tuple(self.values[m] for m in window_range(self.window))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Table):
            return NotImplemented
        return self.window == other.window and self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        return hash((self.window, self.as_tuple()))

    def __len__(self) -> int:
        return self.window[1] - self.window[0] + 1

    def to_json(self) -> dict:
        return {str(m): format_scalar(self.values[m]) for m in window_range(self.window)}

    def __repr__(self) -> str:
        body = ", ".join(f"{m}: {format_scalar(v)}" for m, v in sorted(self.values.items()))
        return f"Table([{self.window[0]}, {self.window[1]}], {{{body}}})"

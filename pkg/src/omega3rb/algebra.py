"""Exact scalars, sparse elements of A_omega and the ternary bracket.

A_omega has basis {L_m : m in Z} and bracket

    [L_l, L_m, L_n] = D(l, m, n) * L_{l+m+n-1}

where D is the 3x3 determinant with rows ((-1)^l, (-1)^m, (-1)^n),
(1, 1, 1) and (l, m, n).  Scalars are exact: ``fractions.Fraction`` at
the interface, with integral values held as ``int`` internally for speed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_scalar(text: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"`` or an integer literal exactly.

    Floating point literals (``"0.5"``, ``"1e3"``) are rejected.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text))
    if match is None:
        raise ValueError(f"not an exact rational (use p/q or an integer): {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_scalar(value: ScalarLike) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _norm(v):
    # integral values are kept as int internally: exact, and much faster
    if type(v) is Fraction and v._denominator == 1:
        return v._numerator
    return v


def _parity(i: int) -> int:
    return 1 if i % 2 == 0 else -1


def _det(l: int, m: int, n: int) -> int:
    # cofactor expansion along the parity row
    pl, pm, pn = _parity(l), _parity(m), _parity(n)
    return pl * (n - m) - pm * (n - l) + pn * (m - l)


def det3(l: int, m: int, n: int) -> Fraction:
    """D(l, m, n) as an exact scalar."""
    return Fraction(_det(l, m, n))


def det3_vanishes_closed_form(l: int, m: int, n: int) -> bool:
    if (l - m) * (l - n) * (m - n) == 0:
        return True
    parities = {l % 2, m % 2, n % 2}
    return len(parities) == 1


class Element:
    """Finite linear combination of generators, stored sparsely.

    Zero coefficients are never stored, so equality and zero tests are
    plain dictionary comparisons.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, ScalarLike], Iterable[Tuple[int, ScalarLike]], None] = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for index, coeff in items:
                if coeff == 0:
                    continue
                total = _norm(acc.get(index, 0) + Fraction(coeff))
                if total == 0:
                    acc.pop(index, None)
                else:
                    acc[int(index)] = total
        self._terms = acc

    @classmethod
    def _wrap(cls, terms: dict) -> "Element":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def generator(cls, m: int, coeff: ScalarLike = 1) -> "Element":
        if coeff == 0:
            return cls._wrap({})
        if type(coeff) is not int:
            coeff = _norm(Fraction(coeff))
        return cls._wrap({int(m): coeff})

    @classmethod
    def zero(cls) -> "Element":
        return cls._wrap({})

    def coeff(self, m: int) -> Fraction:
        return Fraction(self._terms.get(m, 0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return ((i, Fraction(c)) for i, c in sorted(self._terms.items()))

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self._terms))

    def as_dict(self) -> dict:
        return {i: Fraction(c) for i, c in self._terms.items()}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def _combine(self, other: "Element", sign: int) -> "Element":
        acc = dict(self._terms)
        for index, coeff in other._terms.items():
            total = _norm(acc.get(index, 0) + sign * coeff)
            if total:
                acc[index] = total
            else:
                acc.pop(index, None)
        return Element._wrap(acc)

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> "Element":
        return Element._wrap({i: -c for i, c in self._terms.items()})

    def __mul__(self, scalar: ScalarLike) -> "Element":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            return Element._wrap({})
        return Element._wrap({i: _norm(c * scalar) for i, c in self._terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for index, coeff in self.items():
            if not parts:
                parts.append(f"{format_scalar(coeff)}*L_{index}")
            elif coeff < 0:
                parts.append(f" - {format_scalar(-coeff)}*L_{index}")
            else:
                parts.append(f" + {format_scalar(coeff)}*L_{index}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


def L(m: int, coeff: ScalarLike = 1) -> Element:
    """Shorthand for ``coeff * L_m``."""
    return Element.generator(m, coeff)


def bracket(x: Element, y: Element, z: Element) -> Element:
    """Trilinear extension of the generator bracket."""
    xt, yt, zt = x._terms, y._terms, z._terms
    if len(xt) == 1 and len(yt) == 1 and len(zt) == 1:
        # generator fast path; the sweep spends most of its time here
        ((l, a),), ((m, b),), ((n, c),) = xt.items(), yt.items(), zt.items()
        d = _det(l, m, n)
        return Element._wrap({l + m + n - 1: _norm(a * b * c * d)} if d else {})
    acc: dict = {}
    for l, a in xt.items():
        for m, b in yt.items():
            ab = a * b
            for n, c in zt.items():
                d = _det(l, m, n)
                if d == 0:
                    continue
                t = l + m + n - 1
                total = _norm(acc.get(t, 0) + ab * c * d)
                if total:
                    acc[t] = total
                else:
                    acc.pop(t, None)
    return Element._wrap(acc)


def fundamental_identity_residual(x1: Element, x2: Element, x3: Element, y2: Element, y3: Element) -> Element:
    lhs = bracket(bracket(x1, x2, x3), y2, y3)
    rhs = (
        bracket(bracket(x1, y2, y3), x2, x3)
        + bracket(bracket(x2, y2, y3), x3, x1)
        + bracket(bracket(x3, y2, y3), x1, x2)
    )
    return lhs - rhs


def bracket_generates(t: int) -> Tuple[int, int, int]:
    """A triple (l, m, n) with l+m+n-1 == t and D(l, m, n) != 0."""
    if 2 * t - 1 + _parity(t) != 0:
        return (0, 1, t)
    if t == 0:
        return (1, 2, -2)
    return (2, 3, -3)

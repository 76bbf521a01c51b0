"""The forty coefficient families of weight-1 homogeneous (k = 0) operators.

Each case is transcribed as printed, including the "f(m) = 0 for the
remaining m" clauses; that is the ``"literal"`` reading.  Other readings:

* ``"mirror"``  the other plausible reading of a garbled index range
  (``m >= m0`` printed where the surrounding part needs ``m <= m0``).
* ``"amended"`` the smallest edit under which every admissible parameter
  set passes the sufficiency sweep.  In all cases found so far the edit
  is a tighter parameter domain, not a different formula.

Cases whose printed statement admits no operator at all and has no small
repair (F0A3-A3, A7, B3, B4, B7) carry no amended reading.

Groups:

* ``FIN``  at least one supporter set finite, f(0)+f(1)+1 != 0 section
* ``RM0``  nonzero evens bounded below (increasing enumeration)
* ``RM1``  nonzero evens bounded above (decreasing enumeration)
* ``R01``  supporter sets unbounded on both sides
* ``F0A``  f(0) = a != 0 and f(0)+f(1)+1 = 0
* ``F0A1`` f(0) = 0, f(1) = -1, finitely many nonzero evens
* ``F0A3`` f(0) = 0, f(1) = -1, infinitely many nonzero evens; parts
  ``A`` (support to the right) and ``B`` (support to the left)
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import format_scalar, parse_scalar
from .coeff import Coeff, Table, Window

ZERO = Fraction(0)
NEG = Fraction(-1)

INT_PARAMS = ("m0", "m1", "m2", "n0", "n1", "l0", "k0")
SCALAR_PARAMS = ("a", "b", "c", "cprime", "d", "dprime", "g", "h", "hprime", "r", "f0", "f1")


class ValidationError(ValueError):
    """Parameters violate a case's printed domain constraints."""


Params = Dict[str, Union[int, Fraction]]
Builder = Callable[[Params], Callable[[int], Fraction]]


@dataclass(frozen=True)
class Constraint:
    text: str
    check: Callable[[Params], bool]


@dataclass(frozen=True)
class Reading:
    """One way of reading a case: a builder plus the constraints it accepts."""

    builder: Builder
    constraints: Tuple[Constraint, ...]
    note: str = ""


@dataclass(frozen=True)
class CaseDef:
    id: str
    group: str
    summary: str
    int_params: Tuple[str, ...]
    scalar_params: Tuple[str, ...]
    constraints: Tuple[Constraint, ...]
    readings: Mapping[str, Reading]
    # True where the classification states the case as sufficient (iff)
    sufficiency_asserted: bool
    # coefficient index each scalar parameter is stored at, given int params
    scalar_sites: Mapping[str, Callable[[Params], int]] = field(default_factory=dict)

    def domain(self) -> dict:
        return {
            "id": self.id,
            "group": self.group,
            "summary": self.summary,
            "int_params": list(self.int_params),
            "scalar_params": list(self.scalar_params),
            "constraints": [c.text for c in self.constraints],
            "readings": {name: [c.text for c in r.constraints] for name, r in self.readings.items()},
            "sufficiency_asserted": self.sufficiency_asserted,
        }


class Family(Coeff):
    """A catalog case instantiated with concrete parameters; total on Z."""

    def __init__(self, case: CaseDef, params: Params, reading: str, fn: Callable[[int], Fraction]):
        self.case = case
        self.params = dict(params)
        self.reading = reading
        self._fn = fn

    @property
    def case_id(self) -> str:
        return self.case.id

    def __call__(self, m: int) -> Fraction:
        return self._fn(m)

    def params_text(self) -> str:
        return ",".join(f"{k}={_param_text(v)}" for k, v in self.params.items())

    def to_json(self) -> dict:
        return {
            "case": self.case.id,
            "reading": self.reading,
            "params": {k: _param_text(v) for k, v in self.params.items()},
        }

    def __repr__(self) -> str:
        tag = "" if self.reading == "literal" else f" [{self.reading}]"
        return f"Family({self.case.id}{tag}; {self.params_text()})"


def _param_text(v) -> Union[int, str]:
    return v if isinstance(v, int) else format_scalar(v)


# -- evaluation helpers -------------------------------------------------------

def _mult(h: int, step: int, kmin: Optional[int] = None, kmax: Optional[int] = None) -> bool:
    """h == k * step for an integer k in [kmin, kmax]."""
    if h % step:
        return False
    k = h // step
    return (kmin is None or k >= kmin) and (kmax is None or k <= kmax)


def _by_parity(even: Callable[[int], Fraction], odd: Callable[[int], Fraction],
               special: Optional[Dict[int, Fraction]] = None) -> Callable[[int], Fraction]:
    """f(2h) = even(h), f(2h+1) = odd(h), with point overrides."""
    special = special or {}

    def f(m: int) -> Fraction:
        v = special.get(m)
        if v is not None:
            return v
        h, r = divmod(m, 2)
        return odd(h) if r else even(h)

    return f


def _flag(cond: bool) -> Fraction:
    return NEG if cond else ZERO


def _c(text: str, check: Callable[[Params], bool]) -> Constraint:
    return Constraint(text, check)


def _nonzero(*names):
    return _c(" , ".join(f"{n} != 0" for n in names), lambda p: all(p[n] != 0 for n in names))


def _not_zero_or_minus_one(name):
    return _c(f"{name} != 0, -1", lambda p: p[name] not in (0, -1))


# -- FIN: some supporter set finite -------------------------------------------

def _fin1(p):
    return lambda m: ZERO


def _fin2(p):
    return lambda m: NEG


def _fin3(p):
    return _by_parity(lambda h: ZERO, lambda h: NEG, {0: p["f0"], 1: p["f1"]})


def _fin4(p):
    return _by_parity(lambda h: NEG, lambda h: ZERO, {0: p["f0"], 1: p["f1"]})


# -- RM0: nonzero evens bounded below -----------------------------------------

def _rm0_1(p):
    m0, m1 = p["m0"], p["m1"]
    d = m1 - m0
    return _by_parity(
        lambda h: _flag(h == m0 or _mult(h - m1, d, kmin=0)),
        lambda h: _flag(h == -m1 or _mult(h + m0, d, kmin=0)),
    )


def _rm0_2(p):
    return _by_parity(lambda h: _flag(h > 0), lambda h: _flag(h > 0 or h == -1))


def _rm0_3(p):
    m0 = p["m0"]
    return _by_parity(
        lambda h: _flag(_mult(h, m0, kmin=0)),
        lambda h: _flag(h == -m0 or _mult(h, m0, kmin=0)),
    )


def _rm0_4(p):
    m0 = p["m0"]
    return _by_parity(
        lambda h: _flag(h == m0 or _mult(h, m0, kmax=0)),
        lambda h: _flag(_mult(h, m0, kmax=0)),
    )


def _rm0_5(p):
    m0, l0 = p["m0"], p["l0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h >= l0))


def _rm0_6(p):
    m0 = p["m0"]
    return lambda m: _flag(m >= m0 or m in (0, 1))


def _rm0_7(p):
    m0, l0 = p["m0"], p["l0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h >= l0), {0: NEG, 1: NEG})


# -- RM1: nonzero evens bounded above -----------------------------------------

def _rm1_1(p):
    m0, m1 = p["m0"], p["m1"]
    d = m0 - m1
    return _by_parity(
        lambda h: _flag(h == m0 or _mult(h - m1, d, kmax=0)),
        lambda h: _flag(h == -m1 or _mult(h + m0, d, kmax=0)),
    )


def _rm1_2(p):
    return _by_parity(lambda h: _flag(h < 0 or h == 1), lambda h: _flag(h < 0))


def _rm1_3(p):
    m0 = p["m0"]
    return _by_parity(
        lambda h: _flag(_mult(h, m0, kmin=0)),
        lambda h: _flag(h == -m0 or _mult(h, m0, kmin=0)),
    )


def _rm1_4(p):
    m0 = p["m0"]
    return _by_parity(
        lambda h: _flag(h == m0 or _mult(h, m0, kmax=0)),
        lambda h: _flag(_mult(h, m0, kmax=0)),
    )


def _rm1_5(p):
    m0, l0 = p["m0"], p["l0"]
    return _by_parity(lambda h: _flag(h <= m0), lambda h: _flag(h <= l0))


def _rm1_6(p):
    m0 = p["m0"]
    return lambda m: _flag(m <= 2 * m0 + 1 or m in (0, 1))


def _rm1_7(p):
    m0, l0 = p["m0"], p["l0"]
    return _by_parity(lambda h: _flag(h <= m0), lambda h: _flag(h <= l0), {0: NEG, 1: NEG})


# -- R01: unbounded supporter sets ---------------------------------------------

def _r01_1(p):
    m0 = p["m0"]
    return _by_parity(lambda h: ZERO if h % m0 == 0 else NEG, lambda h: ZERO if h % m0 == 0 else NEG)


def _r01_2(p):
    m0 = p["m0"]
    return _by_parity(lambda h: _flag(h % m0 == 0), lambda h: _flag(h % m0 == 0))


# -- F0A: f(0) = a != 0, f(1) = -1 - a ----------------------------------------

def _f0a_1(p):
    a, m0 = p["a"], p["m0"]
    b = -1 - a
    return _by_parity(lambda h: a if h % m0 == 0 else ZERO, lambda h: b if h % m0 == 0 else ZERO)


def _f0a_2(p):
    a, m0 = p["a"], p["m0"]
    period = abs(4 * m0)
    v0, v1 = a, -1 - a
    v2, v3 = -a / (1 + 2 * a), -(1 + a) / (1 + 2 * a)

    def f(m: int) -> Fraction:
        r = m % period
        if r == 0:
            return v0
        if r == 1:
            return v1
        if r == 2:
            return v2
        if r == 3:
            return v3
        return ZERO

    return f


# -- F0A1: f(0) = 0, f(1) = -1, finitely many nonzero evens --------------------

def _f0a1_1(p):
    return _by_parity(lambda h: ZERO, lambda h: NEG)


def _f0a1_2(p):
    return _by_parity(lambda h: ZERO, lambda h: NEG, {2 * p["n0"] + 1: p["c"]})


def _f0a1_3(p):
    return _by_parity(lambda h: ZERO, lambda h: NEG, {2 * p["n0"] + 1: ZERO})


def _f0a1_4(p):
    return _by_parity(lambda h: ZERO, lambda h: NEG, {2 * p["m0"]: p["b"]})


# -- F0A3 part A: m0 > 0, n0 < 0 ------------------------------------------------

def _a1(p):
    m0, n0 = p["m0"], p["n0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h > n0))


def _a2(p):
    m0 = p["m0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h >= 0), {-1: p["c"], -3: p["d"]})


def _a3(p):
    m0 = p["m0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h >= 0), {3: p["cprime"], -1: NEG, -3: NEG})


def _a4(p):
    m0 = p["m0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h >= 0), {-1: p["g"]})


def _a5(p):
    m0, n0 = p["m0"], p["n0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h > n0), {2 * p["m1"]: p["h"]})


def _a6(p):
    m0, n0 = p["m0"], p["n0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h > n0),
                      {2 * p["m1"]: p["h"], 2 * p["n1"] + 1: p["hprime"]})


def _a7(p):
    m0, n0 = p["m0"], p["n0"]
    return _by_parity(lambda h: _flag(h >= m0), lambda h: _flag(h > n0),
                      {2 * p["m1"]: p["g"], 2 * p["m2"]: p["r"]})


# -- F0A3 part B: m0 < 0, n0 > 0 ------------------------------------------------

def _b1(p):
    m0, n0 = p["m0"], p["n0"]
    return _by_parity(lambda h: _flag(h <= m0), lambda h: _flag(h < n0))


def _b2(p):
    m0 = p["m0"]
    return _by_parity(lambda h: _flag(h <= m0), lambda h: _flag(h <= 0), {3: p["c"]})


def _b3(p):
    m0 = p["m0"]
    return _by_parity(lambda h: _flag(h <= m0), lambda h: _flag(h < -2),
                      {1: NEG, 3: NEG, -1: p["cprime"], -3: p["dprime"]})


def _b4(literal: bool):
    def build(p):
        m0 = p["m0"]
        even = (lambda h: _flag(h >= m0)) if literal else (lambda h: _flag(h <= m0))
        return _by_parity(even, lambda h: _flag(h <= 0), {-1: p["g"]})

    return build


def _b5(literal: bool):
    def build(p):
        m0, n0 = p["m0"], p["n0"]
        even = (lambda h: _flag(h >= m0)) if literal else (lambda h: _flag(h <= m0))
        return _by_parity(even, lambda h: _flag(h < n0), {2 * p["m1"]: p["h"]})

    return build


def _b6(p):
    m0, n0 = p["m0"], p["n0"]
    return _by_parity(lambda h: _flag(h <= m0), lambda h: _flag(h < n0),
                      {2 * p["m1"]: p["h"], 2 * p["n1"] + 1: p["hprime"]})


def _b7(p):
    m0, n0 = p["m0"], p["n0"]
    return _by_parity(lambda h: _flag(h <= m0), lambda h: _flag(h < n0),
                      {2 * p["m1"]: p["g"], 2 * p["m2"]: p["r"]})


# -- registry -------------------------------------------------------------------

_M0_POS = _c("m0 > 0", lambda p: p["m0"] > 0)
_M0_NEG = _c("m0 < 0", lambda p: p["m0"] < 0)
_M0_NZ = _c("m0 != 0", lambda p: p["m0"] != 0)
_N0_NEG = _c("n0 < 0", lambda p: p["n0"] < 0)
_N0_POS = _c("n0 > 0", lambda p: p["n0"] > 0)
_N0_NZ = _c("n0 != 0", lambda p: p["n0"] != 0)


def _in(expr: str, fn: Callable[[Params], int], allowed) -> Constraint:
    allowed = tuple(allowed)
    shown = ", ".join(str(a) for a in allowed)
    return _c(f"{expr} in {{{shown}}}", lambda p: fn(p) in allowed)


def _eq(lhs: str, rhs: str, fn_l, fn_r) -> Constraint:
    return _c(f"{lhs} = {rhs}", lambda p: fn_l(p) == fn_r(p))


def _amend(*extra: Constraint, builder: Optional[Builder] = None, base: Optional[str] = None,
           replace: bool = False, note: str = ""):
    return _Amend(extra, builder, base, replace, note)


@dataclass(frozen=True)
class _Amend:
    extra: Tuple[Constraint, ...]
    builder: Optional[Builder]
    base: Optional[str]
    replace: bool
    note: str


def _pin01(builder: Builder) -> Builder:
    # F0A1/F0A3 live in the branch f(0) = 0, f(1) = -1; printed ranges that
    # happen to reach 0 or 1 do not override the branch hypothesis
    def build(p):
        fn = builder(p)
        return lambda m: ZERO if m == 0 else (NEG if m == 1 else fn(m))

    return build


def _case(id, group, summary, ints=(), scalars=(), constraints=(), readings=None,
          iff=False, sites=None) -> CaseDef:
    constraints = tuple(constraints)
    if callable(readings):
        readings = {"literal": readings}
    built: Dict[str, Reading] = {}
    for name, spec in readings.items():
        if isinstance(spec, _Amend):
            base = built[spec.base or "literal"]
            cons = spec.extra if spec.replace else base.constraints + spec.extra
            built[name] = Reading(spec.builder or base.builder, cons, spec.note)
        else:
            built[name] = Reading(_pin01(spec) if group in ("F0A1", "F0A3") else spec, constraints)
    return CaseDef(id, group, summary, tuple(ints), tuple(scalars), constraints,
                   built, iff, dict(sites or {}))


_M0N0_SUM = lambda p: p["m0"] + p["n0"]
_ABS_SUM_LE_2 = _c("|m0 + n0| <= 2", lambda p: abs(p["m0"] + p["n0"]) <= 2)
_M1_IS_M0 = _eq("m1", "m0", lambda p: p["m1"], lambda p: p["m0"])

_CASES: List[CaseDef] = [
    _case("FIN-1", "FIN", "f(m) = 0", readings=_fin1, iff=True),
    _case("FIN-2", "FIN", "f(m) = -1", readings=_fin2, iff=True),
    _case("FIN-3", "FIN", "f(2m) = 0, f(2m+1) = -1 for m != 0; f(0) = f0, f(1) = f1",
          scalars=("f0", "f1"),
          constraints=[_c("f0*(f1+1) = 0", lambda p: p["f0"] * (p["f1"] + 1) == 0)],
          readings=_fin3, iff=True, sites={"f0": lambda p: 0, "f1": lambda p: 1}),
    _case("FIN-4", "FIN", "f(2m) = -1, f(2m+1) = 0 for m != 0; f(0) = f0, f(1) = f1",
          scalars=("f0", "f1"),
          constraints=[_c("f1*(f0+1) = 0", lambda p: p["f1"] * (p["f0"] + 1) == 0)],
          readings=_fin4, iff=True, sites={"f0": lambda p: 0, "f1": lambda p: 1}),

    _case("RM0-1", "RM0", "f(2m0) = f(2m1+2k(m1-m0)) = f(-2m1+1) = f(-2m0+2k(m1-m0)+1) = -1, k >= 0",
          ints=("m0", "m1"), constraints=[_c("m0 < m1", lambda p: p["m0"] < p["m1"])],
          readings={"literal": _rm0_1,
                    "amended": _amend(_eq("m1", "m0 + 1", lambda p: p["m1"], lambda p: p["m0"] + 1))}),
    _case("RM0-2", "RM0", "f(2k) = f(-1) = f(2k+1) = -1, k > 0", readings=_rm0_2),
    _case("RM0-3", "RM0", "f(2km0) = f(-2m0+1) = f(2km0+1) = -1, k >= 0",
          ints=("m0",), constraints=[_M0_POS],
          readings={"literal": _rm0_3, "amended": _amend(_in("m0", lambda p: p["m0"], [1]))}),
    _case("RM0-4", "RM0", "f(2m0) = f(2km0) = f(2km0+1) = -1, k <= 0",
          ints=("m0",), constraints=[_M0_NEG],
          readings={"literal": _rm0_4, "amended": _amend(_in("m0", lambda p: p["m0"], [-1]))}),
    _case("RM0-5", "RM0", "f(2m) = f(2l+1) = -1 for m >= m0, l >= l0",
          ints=("m0", "l0"), constraints=[_c("l0 > -m0", lambda p: p["l0"] > -p["m0"])],
          readings={"literal": _rm0_5,
                    "amended": _amend(_c("m0 + l0 <= 3", lambda p: p["m0"] + p["l0"] <= 3))}),
    _case("RM0-6", "RM0", "f(0) = f(1) = -1, f(m) = -1 for m >= m0",
          ints=("m0",), constraints=[_c("m0 > 1", lambda p: p["m0"] > 1)],
          readings={"literal": _rm0_6, "amended": _amend(_in("m0", lambda p: p["m0"], [2, 3]))}),
    _case("RM0-7", "RM0", "f(0) = f(1) = -1, f(2m) = f(2n+1) = -1 for m >= m0, n >= l0",
          ints=("m0", "l0"),
          constraints=[_M0_POS, _c("l0 > 0", lambda p: p["l0"] > 0),
                       _c("m0 != l0", lambda p: p["m0"] != p["l0"])],
          readings={"literal": _rm0_7,
                    "amended": _amend(_in("m0 + l0", lambda p: p["m0"] + p["l0"], [3]))}),

    _case("RM1-1", "RM1", "f(2m0) = f(2m1+2k(m0-m1)) = f(-2m1+1) = f(-2m0+2k(m0-m1)+1) = -1, k <= 0",
          ints=("m0", "m1"), constraints=[_c("m0 > m1", lambda p: p["m0"] > p["m1"])],
          readings={"literal": _rm1_1,
                    "amended": _amend(_eq("m1", "m0 - 1", lambda p: p["m1"], lambda p: p["m0"] - 1))}),
    _case("RM1-2", "RM1", "f(2) = f(2k) = f(2k+1) = -1, k < 0", readings=_rm1_2),
    _case("RM1-3", "RM1", "f(2km0) = f(-2m0+1) = f(2km0+1) = -1, k >= 0",
          ints=("m0",), constraints=[_M0_NEG],
          readings={"literal": _rm1_3, "amended": _amend(_in("m0", lambda p: p["m0"], [-1]))}),
    _case("RM1-4", "RM1", "f(2m0) = f(2km0) = f(2km0+1) = -1, k <= 0",
          ints=("m0",), constraints=[_M0_POS],
          readings={"literal": _rm1_4, "amended": _amend(_in("m0", lambda p: p["m0"], [1]))}),
    _case("RM1-5", "RM1", "f(2m) = f(2l+1) = -1 for m <= m0, l <= l0",
          ints=("m0", "l0"), constraints=[_c("l0 < -m0", lambda p: p["l0"] < -p["m0"])],
          readings={"literal": _rm1_5,
                    "amended": _amend(_c("m0 + l0 >= -3", lambda p: p["m0"] + p["l0"] >= -3))}),
    _case("RM1-6", "RM1", "f(0) = f(1) = -1, f(l) = -1 for l <= 2m0+1",
          ints=("m0",), constraints=[_c("m0 < -1", lambda p: p["m0"] < -1)],
          readings={"literal": _rm1_6,
                    "amended": _amend(_in("m0", lambda p: p["m0"], [-1]), replace=True,
                                      note="printed bound m0 < -1 admits no operator; m0 = -1 does")}),
    _case("RM1-7", "RM1", "f(0) = f(1) = -1, f(2m) = f(2l+1) = -1 for m <= m0, l <= l0",
          ints=("m0", "l0"),
          constraints=[_c("l0 < 0", lambda p: p["l0"] < 0), _M0_NEG,
                       _c("m0 != l0", lambda p: p["m0"] != p["l0"])],
          readings={"literal": _rm1_7,
                    "amended": _amend(_in("m0 + l0", lambda p: p["m0"] + p["l0"], [-3]))}),

    _case("R01-1", "R01", "f(2km0) = f(2km0+1) = 0, f = -1 elsewhere",
          ints=("m0",), constraints=[_M0_NZ], iff=True,
          readings={"literal": _r01_1, "amended": _amend(_c("|m0| <= 2", lambda p: abs(p["m0"]) <= 2))}),
    _case("R01-2", "R01", "f(2km0) = f(2km0+1) = -1, f = 0 elsewhere",
          ints=("m0",), constraints=[_M0_NZ], iff=True,
          readings={"literal": _r01_2, "amended": _amend(_c("|m0| <= 2", lambda p: abs(p["m0"]) <= 2))}),

    _case("F0A-1", "F0A", "f(2m0k) = a, f(2m0k+1) = -1-a",
          ints=("m0",), scalars=("a",), constraints=[_M0_NZ, _nonzero("a")],
          readings={"literal": _f0a_1, "amended": _amend(_c("|m0| = 1", lambda p: abs(p["m0"]) == 1))},
          sites={"a": lambda p: 0}),
    _case("F0A-2", "F0A",
          "f(4m0k) = a, f(4m0k+1) = -1-a, f(4m0k+2) = -a/(1+2a), f(4m0k+3) = -(1+a)/(1+2a)",
          ints=("m0",), scalars=("a",),
          constraints=[_M0_NZ, _c("a != 0", lambda p: p["a"] != 0),
                       _c("a != -1, -1/2", lambda p: p["a"] not in (-1, Fraction(-1, 2)))],
          readings={"literal": _f0a_2, "amended": _amend(_c("|m0| = 1", lambda p: abs(p["m0"]) == 1))},
          sites={"a": lambda p: 0}),

    _case("F0A1-1", "F0A1", "f(2m) = 0, f(2m+1) = -1", readings=_f0a1_1, iff=True),
    _case("F0A1-2", "F0A1", "as F0A1-1 except f(2n0+1) = c",
          ints=("n0",), scalars=("c",), constraints=[_N0_NZ, _not_zero_or_minus_one("c")],
          readings=_f0a1_2, iff=True, sites={"c": lambda p: 2 * p["n0"] + 1}),
    _case("F0A1-3", "F0A1", "as F0A1-1 except f(2n0+1) = 0",
          ints=("n0",), constraints=[_N0_NZ], readings=_f0a1_3, iff=True),
    _case("F0A1-4", "F0A1", "as F0A1-1 except f(2m0) = b",
          ints=("m0",), scalars=("b",), constraints=[_M0_NZ, _nonzero("b")],
          readings=_f0a1_4, iff=True, sites={"b": lambda p: 2 * p["m0"]}),

    _case("F0A3-A1", "F0A3", "f(2m) = -1 for m >= m0, f(2n+1) = -1 for n > n0",
          ints=("m0", "n0"), constraints=[_M0_POS, _N0_NEG], iff=True,
          readings={"literal": _a1, "amended": _amend(_ABS_SUM_LE_2)}),
    _case("F0A3-A2", "F0A3", "f(2m) = -1 for m >= m0, f(2n+1) = -1 for n >= 0, f(-1) = c, f(-3) = d",
          ints=("m0",), scalars=("c", "d"),
          constraints=[_M0_POS, _c("c*d != 0", lambda p: p["c"] * p["d"] != 0),
                       _c("c != -1 or d != -1", lambda p: p["c"] != -1 or p["d"] != -1)],
          readings={"literal": _a2,
                    "amended": _amend(_c("c = -1", lambda p: p["c"] == -1),
                                      _in("m0", lambda p: p["m0"], [2, 3]))},
          iff=True, sites={"c": lambda p: -1, "d": lambda p: -3}),
    _case("F0A3-A3", "F0A3", "f(2m) = -1 for m >= m0, f(2n+1) = -1 for n >= 0, n != 1, f(-1) = f(-3) = -1, f(3) = c'",
          ints=("m0",), scalars=("cprime",),
          constraints=[_M0_POS, _not_zero_or_minus_one("cprime")],
          readings=_a3, iff=True, sites={"cprime": lambda p: 3}),
    _case("F0A3-A4", "F0A3", "f(2m) = -1 for m >= m0, f(2n+1) = -1 for n >= 0, f(-1) = g",
          ints=("m0",), scalars=("g",), constraints=[_M0_POS, _not_zero_or_minus_one("g")],
          readings={"literal": _a4, "amended": _amend(_in("m0", lambda p: p["m0"], [1, 2]))},
          iff=True, sites={"g": lambda p: -1}),
    _case("F0A3-A5", "F0A3", "f(2m1) = h, f(2m) = -1 for m >= m0, m != m1, f(2n+1) = -1 for n > n0",
          ints=("m0", "n0", "m1"), scalars=("h",),
          constraints=[_M0_POS, _N0_NEG, _c("m1 >= m0", lambda p: p["m1"] >= p["m0"]),
                       _not_zero_or_minus_one("h")],
          readings={"literal": _a5,
                    "amended": _amend(_M1_IS_M0, _in("m0 + n0", _M0N0_SUM, [-1, 0]))},
          iff=True, sites={"h": lambda p: 2 * p["m1"]}),
    _case("F0A3-A6", "F0A3", "as A5 plus f(2n1+1) = h'",
          ints=("m0", "n0", "m1", "n1"), scalars=("h", "hprime"),
          constraints=[_M0_POS, _N0_NEG, _c("m1 >= m0", lambda p: p["m1"] >= p["m0"]),
                       _c("n1 > n0", lambda p: p["n1"] > p["n0"]),
                       _c("n1 != 0 (f(1) = -1)", lambda p: p["n1"] != 0),
                       _c("h, h' != -1", lambda p: p["h"] != -1 and p["hprime"] != -1),
                       _c("h*h' != 0", lambda p: p["h"] * p["hprime"] != 0)],
          readings={"literal": _a6,
                    "amended": _amend(_M1_IS_M0,
                                      _eq("n1", "n0 + 1", lambda p: p["n1"], lambda p: p["n0"] + 1),
                                      _in("m0 + n0", _M0N0_SUM, [-1]))},
          iff=True, sites={"h": lambda p: 2 * p["m1"], "hprime": lambda p: 2 * p["n1"] + 1}),
    _case("F0A3-A7", "F0A3", "f(2m1) = g, f(2m2) = r, f(2m) = -1 for m >= m0 otherwise, f(2n+1) = -1 for n > n0",
          ints=("m0", "n0", "m1", "m2"), scalars=("g", "r"),
          constraints=[_M0_POS, _N0_NEG,
                       _c("m1, m2 >= m0", lambda p: p["m1"] >= p["m0"] and p["m2"] >= p["m0"]),
                       _c("m1 != m2", lambda p: p["m1"] != p["m2"]),
                       _c("g, r != -1", lambda p: p["g"] != -1 and p["r"] != -1),
                       _c("g*r != 0", lambda p: p["g"] * p["r"] != 0)],
          readings=_a7, iff=True, sites={"g": lambda p: 2 * p["m1"], "r": lambda p: 2 * p["m2"]}),

    _case("F0A3-B1", "F0A3", "f(2m) = -1 for m <= m0, f(2n+1) = -1 for n < n0",
          ints=("m0", "n0"), constraints=[_M0_NEG, _N0_POS], iff=True,
          readings={"literal": _b1, "amended": _amend(_ABS_SUM_LE_2)}),
    _case("F0A3-B2", "F0A3", "f(2m) = -1 for m <= m0, f(2n+1) = -1 for n <= 0, f(3) = c",
          ints=("m0",), scalars=("c",), constraints=[_M0_NEG, _not_zero_or_minus_one("c")],
          readings={"literal": _b2, "amended": _amend(_in("m0", lambda p: p["m0"], [-2, -1]))},
          iff=True, sites={"c": lambda p: 3}),
    _case("F0A3-B3", "F0A3",
          "f(2m) = -1 for m <= m0, f(2n+1) = -1 for n < -2, f(1) = f(3) = -1, f(-1) = c', f(-3) = d'",
          ints=("m0",), scalars=("cprime", "dprime"),
          constraints=[_M0_NEG, _c("c'*d' != 0", lambda p: p["cprime"] * p["dprime"] != 0),
                       _c("c' != -1 or d' != -1", lambda p: p["cprime"] != -1 or p["dprime"] != -1)],
          readings=_b3, iff=True, sites={"cprime": lambda p: -1, "dprime": lambda p: -3}),
    _case("F0A3-B4", "F0A3", "f(2m) = -1 for m >= m0, f(2n+1) = -1 for n <= 0, n != -1, f(-1) = g",
          ints=("m0",), scalars=("g",), constraints=[_M0_NEG, _not_zero_or_minus_one("g")],
          readings={"literal": _b4(True), "mirror": _b4(False)}, iff=True, sites={"g": lambda p: -1}),
    _case("F0A3-B5", "F0A3", "f(2m1) = h, f(2m) = -1 for m >= m0, m != m1, f(2n+1) = -1 for n < n0",
          ints=("m0", "n0", "m1"), scalars=("h",),
          constraints=[_M0_NEG, _N0_POS, _c("m1 <= m0", lambda p: p["m1"] <= p["m0"]),
                       _not_zero_or_minus_one("h")],
          readings={"literal": _b5(True), "mirror": _b5(False),
                    "amended": _amend(_M1_IS_M0, _in("m0 + n0", _M0N0_SUM, [0, 1]), base="mirror")},
          iff=True, sites={"h": lambda p: 2 * p["m1"]}),
    _case("F0A3-B6", "F0A3", "as B5 (m <= m0) plus f(2n1+1) = h'",
          ints=("m0", "n0", "m1", "n1"), scalars=("h", "hprime"),
          constraints=[_M0_NEG, _N0_POS, _c("m1 <= m0", lambda p: p["m1"] <= p["m0"]),
                       _c("n1 < n0", lambda p: p["n1"] < p["n0"]),
                       _c("n1 != 0 (f(1) = -1)", lambda p: p["n1"] != 0),
                       _c("h, h' != -1", lambda p: p["h"] != -1 and p["hprime"] != -1),
                       _c("h*h' != 0", lambda p: p["h"] * p["hprime"] != 0)],
          readings={"literal": _b6,
                    "amended": _amend(_M1_IS_M0,
                                      _eq("n1", "n0 - 1", lambda p: p["n1"], lambda p: p["n0"] - 1),
                                      _in("m0 + n0", _M0N0_SUM, [1]))},
          iff=True, sites={"h": lambda p: 2 * p["m1"], "hprime": lambda p: 2 * p["n1"] + 1}),
    _case("F0A3-B7", "F0A3", "f(2m1) = g, f(2m2) = r, f(2m) = -1 for m <= m0 otherwise, f(2n+1) = -1 for n < n0",
          ints=("m0", "n0", "m1", "m2"), scalars=("g", "r"),
          constraints=[_M0_NEG, _N0_POS,
                       _c("m1, m2 <= m0", lambda p: p["m1"] <= p["m0"] and p["m2"] <= p["m0"]),
                       _c("m1 != m2", lambda p: p["m1"] != p["m2"]),
                       _c("g, r != -1", lambda p: p["g"] != -1 and p["r"] != -1),
                       _c("g*r != 0", lambda p: p["g"] * p["r"] != 0)],
          readings=_b7, iff=True, sites={"g": lambda p: 2 * p["m1"], "r": lambda p: 2 * p["m2"]}),
]

CASES: Dict[str, CaseDef] = {c.id: c for c in _CASES}


def get_case(case_id: str) -> CaseDef:
    try:
        return CASES[case_id.upper()]
    except KeyError:
        raise ValidationError(f"unknown case id {case_id!r}") from None


def enumerate_cases() -> List[Tuple[str, dict]]:
    return [(c.id, c.domain()) for c in _CASES]


def _coerce_params(case: CaseDef, params: Mapping[str, object]) -> Params:
    expected = set(case.int_params) | set(case.scalar_params)
    unknown = set(params) - expected
    if unknown:
        raise ValidationError(f"{case.id}: unknown parameter(s) {sorted(unknown)}; expects {sorted(expected)}")
    missing = expected - set(params)
    if missing:
        raise ValidationError(f"{case.id}: missing parameter(s) {sorted(missing)}")
    out: Params = {}
    for name in case.int_params:
        value = params[name]
        try:
            q = parse_scalar(value)
        except ValueError as exc:
            raise ValidationError(f"{case.id}: {name}: {exc}") from None
        if q.denominator != 1:
            raise ValidationError(f"{case.id}: {name} must be an integer, got {format_scalar(q)}")
        out[name] = int(q)
    for name in case.scalar_params:
        try:
            out[name] = parse_scalar(params[name])
        except ValueError as exc:
            raise ValidationError(f"{case.id}: {name}: {exc}") from None
    return out


def validate(case: CaseDef, params: Params, reading: str = "literal") -> None:
    for constraint in case.readings[reading].constraints:
        if not constraint.check(params):
            tag = "" if reading == "literal" else f" ({reading} reading)"
            raise ValidationError(f"{case.id}{tag}: parameters violate {constraint.text}")


def build_family(case_id: str, params: Optional[Mapping[str, object]] = None, reading: str = "literal") -> Family:
    case = get_case(case_id)
    if reading not in case.readings:
        raise ValidationError(f"{case.id} has no {reading!r} reading; available: {list(case.readings)}")
    p = _coerce_params(case, params or {})
    validate(case, p, reading)
    return Family(case, p, reading, case.readings[reading].builder(p))


def evaluate(f: Coeff, m: int) -> Fraction:
    return f(m)


def restrict(f: Coeff, w: Window) -> Table:
    return f.restrict(w)


def parse_params(text: str) -> Dict[str, str]:
    """``"a=1/2,m0=1"`` -> ``{"a": "1/2", "m0": "1"}``."""
    out: Dict[str, str] = {}
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        if "=" not in chunk:
            raise ValidationError(f"malformed parameter {chunk!r}; expected name=value")
        key, value = (s.strip() for s in chunk.split("=", 1))
        out[key] = value
    return out


def load_params_document(path: str) -> Tuple[Optional[str], Optional[str], Dict[str, str]]:
    """Read an INI-style parameter document.

    ::

        [family]
        case = F0A-2
        reading = literal
        a = 1
        m0 = 1

    Returns ``(case, reading, params)``; ``case``/``reading`` may be None.
    """
    parser = configparser.ConfigParser()
    with open(path, encoding="utf-8") as fh:
        parser.read_file(fh)
    if not parser.has_section("family"):
        raise ValidationError(f"{path}: missing [family] section")
    section = dict(parser.items("family"))
    case = section.pop("case", None)
    reading = section.pop("reading", None)
    return case, reading, section


# Parameter samples used by the acceptance sweeps: small integers for the
# integer parameters, scalars from {2, -3, 1/2, 5} where the constraints
# allow.  FIN-3/FIN-4 need 0 or -1 for their product rule and F0A3-A2 needs
# c = -1 to have any operator at all.  Where a printed domain is wider than
# the true one, a second sample sits outside the true domain so the failure
# of the literal reading is on record.
PARAMETER_FIXTURE: Dict[str, List[Dict[str, object]]] = {
    "FIN-1": [{}],
    "FIN-2": [{}],
    "FIN-3": [{"f0": 0, "f1": 2}, {"f0": 5, "f1": -1}],
    "FIN-4": [{"f0": -1, "f1": 2}, {"f0": 5, "f1": 0}],
    "RM0-1": [{"m0": 1, "m1": 2}, {"m0": -1, "m1": 1}],
    "RM0-2": [{}],
    "RM0-3": [{"m0": 1}, {"m0": 2}],
    "RM0-4": [{"m0": -1}, {"m0": -2}],
    "RM0-5": [{"m0": 1, "l0": 0}, {"m0": 2, "l0": 2}],
    "RM0-6": [{"m0": 2}, {"m0": 4}],
    "RM0-7": [{"m0": 1, "l0": 2}, {"m0": 1, "l0": 3}],
    "RM1-1": [{"m0": 1, "m1": 0}, {"m0": 2, "m1": -1}],
    "RM1-2": [{}],
    "RM1-3": [{"m0": -1}, {"m0": -2}],
    "RM1-4": [{"m0": 1}, {"m0": 2}],
    "RM1-5": [{"m0": -1, "l0": 0}, {"m0": -2, "l0": -2}],
    "RM1-6": [{"m0": -2}, {"m0": -1}],
    "RM1-7": [{"m0": -1, "l0": -2}, {"m0": -1, "l0": -3}],
    "R01-1": [{"m0": 1}, {"m0": -3}],
    "R01-2": [{"m0": 2}, {"m0": -3}],
    "F0A-1": [{"a": 2, "m0": 1}, {"a": "1/2", "m0": 2}],
    "F0A-2": [{"a": 1, "m0": 1}, {"a": 2, "m0": 2}],
    "F0A1-1": [{}],
    "F0A1-2": [{"n0": 2, "c": 3}, {"n0": -1, "c": "1/2"}],
    "F0A1-3": [{"n0": -2}],
    "F0A1-4": [{"m0": -2, "b": -3}],
    "F0A3-A1": [{"m0": 1, "n0": -1}, {"m0": 1, "n0": -4}],
    "F0A3-A2": [{"m0": 2, "c": -1, "d": 2}, {"m0": 1, "c": 2, "d": -3}],
    "F0A3-A3": [{"m0": 1, "cprime": 2}],
    "F0A3-A4": [{"m0": 1, "g": 2}, {"m0": 3, "g": "1/2"}],
    "F0A3-A5": [{"m0": 1, "n0": -1, "m1": 1, "h": 2}, {"m0": 1, "n0": -1, "m1": 2, "h": 2}],
    "F0A3-A6": [{"m0": 1, "n0": -2, "m1": 1, "n1": -1, "h": 2, "hprime": -3},
                {"m0": 1, "n0": -1, "m1": 1, "n1": 2, "h": 2, "hprime": -3}],
    "F0A3-A7": [{"m0": 1, "n0": -1, "m1": 1, "m2": 3, "g": 2, "r": -3}],
    "F0A3-B1": [{"m0": -1, "n0": 1}, {"m0": -1, "n0": 4}],
    "F0A3-B2": [{"m0": -1, "c": 2}, {"m0": -3, "c": "1/2"}],
    "F0A3-B3": [{"m0": -1, "cprime": 2, "dprime": -3}],
    "F0A3-B4": [{"m0": -1, "g": 2}],
    "F0A3-B5": [{"m0": -1, "n0": 1, "m1": -1, "h": 2}, {"m0": -1, "n0": 1, "m1": -2, "h": 2}],
    "F0A3-B6": [{"m0": -1, "n0": 2, "m1": -1, "n1": 1, "h": 2, "hprime": -3},
                {"m0": -1, "n0": 1, "m1": -1, "n1": -2, "h": 2, "hprime": -3}],
    "F0A3-B7": [{"m0": -1, "n0": 1, "m1": -1, "m2": -3, "g": 2, "r": -3}],
}


def fixture_families(case_id: str) -> List[Tuple[Dict[str, object], Dict[str, Optional[Family]]]]:
    """Every fixture parameter set of a case under every reading.

    A reading whose constraints reject the set maps to None.
    """
    case = get_case(case_id)
    out = []
    for params in PARAMETER_FIXTURE[case.id]:
        built: Dict[str, Optional[Family]] = {}
        for r in case.readings:
            try:
                built[r] = build_family(case.id, params, r)
            except ValidationError:
                built[r] = None
        out.append((params, built))
    return out

"""Closed formulas for N(a1,a2,a3,a4; n) over the 26 level-40 forms.

Each formula is a rational combination of twisted divisor sums
sigma_{chi,psi}(n/t) and coefficients of the cusp forms A1..D4.  The tables
below are written out term by term; ``tests/test_formulas.py`` regenerates
them from the linear solver and diffs the two.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction as F

from .forms import ALL_FORMS, QuadForm
from .numtheory import DirichletChar, divisors, kronecker, sigma_twisted
from .spaces import CUSP_QUOTIENTS, cusp_series

__all__ = [
    "Formula",
    "FORMULAS",
    "CuspCoefficients",
    "cusp_coefficient",
    "rep_count",
    "rep_count_remark41",
    "FormulaError",
]

C0, C1, C2, C3 = DirichletChar.CHI0, DirichletChar.CHI1, DirichletChar.CHI2, DirichletChar.CHI3

DEFAULT_CUSP_PRECISION = 2048


class FormulaError(ArithmeticError):
    """A formula produced a non-integral or negative count."""


@dataclass(frozen=True)
class Formula:
    """sum of c * sigma_{chi,psi}(n/t) plus sum of y * cusp_k(n)."""

    sigma_terms: tuple[tuple[tuple[DirichletChar, DirichletChar, int], F], ...]
    cusp_terms: tuple[tuple[str, F], ...] = ()

    def evaluate(self, n: int, cusp: "CuspCoefficients | None" = None) -> F:
        cusp = cusp or _DEFAULT_CACHE
        total = F(0)
        for (chi, psi, t), c in self.sigma_terms:
            if n % t == 0:
                total += c * sigma_twisted(chi, psi, n // t)
        for name, y in self.cusp_terms:
            total += y * cusp.coefficient(name, n)
        return total


def _sig(chi, psi, pairs) -> list:
    return [((chi, psi, t), F(c)) for t, c in pairs]


def _formula(sigmas, cusps=()) -> Formula:
    return Formula(tuple(sigmas), tuple((k, F(v)) for k, v in cusps))


def _L(*pairs):
    return _sig(C0, C0, pairs)


def _chi1(e01, e10):
    return _sig(C0, C1, e01) + _sig(C1, C0, e10)


def _chi2(e02, e20):
    return _sig(C0, C2, e02) + _sig(C2, C0, e20)


def _chi3(c03, c12, c21, c30):
    return _sig(C0, C3, [(1, c03)]) + _sig(C1, C2, [(1, c12)]) + _sig(C2, C1, [(1, c21)]) + _sig(
        C3, C0, [(1, c30)]
    )


_FORMULA_DATA: dict[tuple[int, ...], Formula] = {
    # trivial character
    (1, 1, 1, 1): _formula(_L((1, 8), (4, -32))),
    (1, 1, 2, 2): _formula(_L((1, 4), (2, -4), (4, 8), (8, -32))),
    (1, 1, 5, 5): _formula(
        _L((1, F(4, 3)), (4, F(-16, 3)), (5, F(20, 3)), (20, F(-80, 3))),
        [("A1", F(8, 3))],
    ),
    (1, 1, 10, 10): _formula(
        _L((1, F(2, 3)), (2, F(-2, 3)), (4, F(4, 3)), (5, F(10, 3)), (8, F(-16, 3)),
           (10, F(-10, 3)), (20, F(20, 3)), (40, F(-80, 3))),
        [("A1", F(10, 3)), ("A2", F(8, 3)), ("A3", 4)],
    ),
    (1, 2, 5, 10): _formula(
        _L((1, 1), (2, -1), (4, -2), (5, -5), (8, 8), (10, 5), (20, 10), (40, -40)),
        [("A1", 1), ("A3", 2)],
    ),
    (2, 2, 5, 5): _formula(
        _L((1, F(2, 3)), (2, F(-2, 3)), (4, F(4, 3)), (5, F(10, 3)), (8, F(-16, 3)),
           (10, F(-10, 3)), (20, F(20, 3)), (40, F(-80, 3))),
        [("A1", F(-2, 3)), ("A2", F(8, 3)), ("A3", -4)],
    ),
    # chi1 = (5/.)
    (1, 1, 1, 5): _formula(_chi1([(1, 1), (2, -2), (4, -4)], [(1, 5), (2, 10), (4, -20)])),
    (1, 1, 2, 10): _formula(
        _chi1([(1, F(-1, 2)), (2, F(1, 2)), (4, -1), (8, -4)],
              [(1, F(5, 2)), (2, F(5, 2)), (4, 5), (8, -20)]),
        [("B2", 2)],
    ),
    (1, 2, 2, 5): _formula(
        _chi1([(1, F(1, 2)), (2, F(-1, 2)), (4, -1), (8, -4)],
              [(1, F(5, 2)), (2, F(5, 2)), (4, -5), (8, 20)]),
        [("B1", 5), ("B2", -1)],
    ),
    (1, 5, 5, 5): _formula(_chi1([(1, 1), (2, -2), (4, -4)], [(1, 1), (2, 2), (4, -4)])),
    (1, 5, 10, 10): _formula(
        _chi1([(1, F(1, 2)), (2, F(-1, 2)), (4, -1), (8, -4)],
              [(1, F(1, 2)), (2, F(1, 2)), (4, -1), (8, 4)]),
        [("B1", -1), ("B2", 1)],
    ),
    (2, 5, 5, 10): _formula(
        _chi1([(1, F(-1, 2)), (2, F(1, 2)), (4, -1), (8, -4)],
              [(1, F(1, 2)), (2, F(1, 2)), (4, 1), (8, -4)]),
        [("B1", -2)],
    ),
    # chi2 = (8/.)
    (1, 1, 1, 2): _formula(_chi2([(1, -2)], [(1, 8)])),
    (1, 1, 5, 10): _formula(
        _chi2([(1, F(4, 13)), (5, F(-30, 13))], [(1, F(16, 13)), (5, F(120, 13))]),
        [("C1", F(48, 13)), ("C2", F(-32, 13)), ("C3", F(-24, 13)), ("C4", F(32, 13))],
    ),
    (1, 2, 2, 2): _formula(_chi2([(1, -2)], [(1, 4)])),
    (1, 2, 5, 5): _formula(
        _chi2([(1, F(-6, 13)), (5, F(-20, 13))], [(1, F(24, 13)), (5, F(-80, 13))]),
        [("C2", F(-16, 13)), ("C3", F(-40, 13)), ("C4", F(8, 13))],
    ),
    (1, 2, 10, 10): _formula(
        _chi2([(1, F(-6, 13)), (5, F(-20, 13))], [(1, F(12, 13)), (5, F(-40, 13))]),
        [("C1", F(8, 13)), ("C3", F(-8, 13)), ("C4", F(20, 13))],
    ),
    (2, 2, 5, 10): _formula(
        _chi2([(1, F(4, 13)), (5, F(-30, 13))], [(1, F(8, 13)), (5, F(60, 13))]),
        [("C1", F(-16, 13)), ("C2", F(48, 13)), ("C3", F(32, 13)), ("C4", F(-12, 13))],
    ),
    # chi3 = (40/.)
    (1, 1, 1, 10): _formula(
        _chi3(F(-1, 7), F(-5, 7), F(4, 7), F(20, 7)),
        [("D1", F(-12, 7)), ("D2", F(60, 7)), ("D3", F(-60, 7)), ("D4", F(36, 7))],
    ),
    (1, 1, 2, 5): _formula(
        _chi3(F(-1, 7), F(5, 7), F(-4, 7), F(20, 7)),
        [("D1", F(-8, 7)), ("D4", F(16, 7))],
    ),
    (1, 2, 2, 10): _formula(
        _chi3(F(-1, 7), F(-5, 7), F(2, 7), F(10, 7)),
        [("D1", F(4, 7)), ("D2", F(20, 7)), ("D3", F(20, 7)), ("D4", F(4, 7))],
    ),
    (1, 5, 5, 10): _formula(
        _chi3(F(-1, 7), F(-1, 7), F(4, 7), F(4, 7)),
        [("D2", F(8, 7)), ("D3", F(-8, 7)), ("D4", F(8, 7))],
    ),
    (1, 10, 10, 10): _formula(
        _chi3(F(-1, 7), F(-1, 7), F(2, 7), F(2, 7)),
        [("D2", F(12, 7)), ("D3", F(12, 7)), ("D4", F(12, 7))],
    ),
    (2, 2, 2, 5): _formula(
        _chi3(F(-1, 7), F(5, 7), F(-2, 7), F(10, 7)),
        [("D1", F(-12, 7))],
    ),
    (2, 5, 5, 5): _formula(
        _chi3(F(-1, 7), F(1, 7), F(-4, 7), F(4, 7)),
        [("D1", F(-12, 7)), ("D2", F(-12, 7)), ("D3", F(-36, 7)), ("D4", F(12, 7))],
    ),
    (2, 5, 10, 10): _formula(
        _chi3(F(-1, 7), F(1, 7), F(-2, 7), F(2, 7)),
        [("D1", F(-4, 7)), ("D2", F(4, 7)), ("D3", F(-12, 7)), ("D4", F(4, 7))],
    ),
}

FORMULAS: dict[QuadForm, Formula] = {QuadForm(k): v for k, v in _FORMULA_DATA.items()}
assert set(FORMULAS) == set(ALL_FORMS)


class CuspCoefficients:
    """Lazily expanded q-coefficients of the cusp forms A1..D4.

    Readers see a fully built table; an extension builds a new table and
    swaps it in under a lock, so concurrent callers never see partial data.
    """

    def __init__(self, precision: int = DEFAULT_CUSP_PRECISION, extend: bool = True):
        self._precision = precision
        self._extend = extend
        self._tables: dict[str, list[int]] = {}
        self._lock = threading.Lock()

    @property
    def precision(self) -> int:
        return self._precision

    def _table(self, name: str, n: int) -> list[int]:
        table = self._tables.get(name)
        if table is not None and n < len(table):
            return table
        if n >= self._precision and not self._extend:
            raise IndexError(f"{name} coefficient q^{n} is beyond cached precision {self._precision}")
        with self._lock:
            table = self._tables.get(name)
            if table is None or n >= len(table):
                prec = self._precision
                while n >= prec:
                    prec *= 2
                table = cusp_series(name, prec).integer_coefficients()
                self._tables = {**self._tables, name: table}
                self._precision = max(self._precision, prec)
        return table

    def coefficient(self, name: str, n: int) -> int:
        if name not in CUSP_QUOTIENTS:
            raise KeyError(f"unknown cusp form {name!r}")
        if n < 0:
            return 0
        return self._table(name, n)[n]


_DEFAULT_CACHE = CuspCoefficients()

_FAMILY_SIZES = {"a": 3, "b": 2, "c": 4, "d": 4}


def cusp_coefficient(family: str, k: int, n: int, cache: CuspCoefficients | None = None) -> int:
    """q^n coefficient of A_k, B_k, C_k or D_k (``family`` is a letter a-d)."""
    family = family.lower()
    if family not in _FAMILY_SIZES or not 1 <= k <= _FAMILY_SIZES[family]:
        raise ValueError(f"no cusp form {family}{k}")
    return (cache or _DEFAULT_CACHE).coefficient(f"{family.upper()}{k}", n)


def rep_count(form: QuadForm, n: int, cache: CuspCoefficients | None = None) -> int:
    """N(form; n) from its closed formula."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    try:
        formula = FORMULAS[form]
    except KeyError:
        raise ValueError(f"no formula for {form.label}") from None
    value = formula.evaluate(n, cache)
    if value.denominator != 1 or value < 0:
        raise FormulaError(f"formula for {form.label} gave {value} at n={n}")
    return int(value)


def rep_count_remark41(n: int) -> int:
    """N(1,1,1,5; n) through the alternating divisor sums with (5/d)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in divisors(n):
        sign = -1 if (n + d) % 2 else 1
        total += sign * kronecker(5, d) * d + 5 * sign * kronecker(5, n // d) * d
    return total

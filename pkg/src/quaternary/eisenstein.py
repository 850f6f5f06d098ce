"""Weight-2 Eisenstein series attached to pairs of the level-40 characters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numtheory import DirichletChar, sigma_twisted
from .qseries import QSeries, series_dilate

__all__ = ["EisensteinSpec", "EISENSTEIN_PAIRS", "eisenstein_series", "L_series", "L_combination"]

C0, C1, C2, C3 = DirichletChar.CHI0, DirichletChar.CHI1, DirichletChar.CHI2, DirichletChar.CHI3

# constant terms of E_{chi,psi}; the nine pairs used at level 40
_CONSTANTS: dict[tuple[DirichletChar, DirichletChar], Fraction] = {
    (C0, C0): Fraction(-1, 24),
    (C0, C1): Fraction(-1, 5),
    (C1, C0): Fraction(0),
    (C0, C2): Fraction(-1, 2),
    (C2, C0): Fraction(0),
    (C0, C3): Fraction(-7),
    (C3, C0): Fraction(0),
    (C1, C2): Fraction(0),
    (C2, C1): Fraction(0),
}

EISENSTEIN_PAIRS = tuple(_CONSTANTS)

L_SHIFTS = (2, 4, 5, 8, 10, 20, 40)


@dataclass(frozen=True)
class EisensteinSpec:
    chi: DirichletChar
    psi: DirichletChar

    def __post_init__(self):
        if (self.chi, self.psi) not in _CONSTANTS:
            raise ValueError(f"no Eisenstein series defined for ({self.chi}, {self.psi})")

    @property
    def constant_term(self) -> Fraction:
        return _CONSTANTS[(self.chi, self.psi)]

    @property
    def name(self) -> str:
        if self.chi is C0 and self.psi is C0:
            return "L"
        return f"E[{self.chi},{self.psi}]"


@lru_cache(maxsize=64)
def _eisenstein_cached(chi: DirichletChar, psi: DirichletChar, precision: int) -> QSeries:
    coeffs = [_CONSTANTS[(chi, psi)]]
    coeffs += [Fraction(sigma_twisted(chi, psi, n)) for n in range(1, precision)]
    return QSeries(coeffs, precision)


def eisenstein_series(spec: EisensteinSpec, precision: int) -> QSeries:
    if precision < 1:
        raise ValueError("precision must be positive")
    return _eisenstein_cached(spec.chi, spec.psi, precision)


def L_series(precision: int) -> QSeries:
    return eisenstein_series(EisensteinSpec(C0, C0), precision)


def L_combination(t: int, precision: int) -> QSeries:
    """L(q) - t L(q^t) for t in 2, 4, 5, 8, 10, 20, 40."""
    if t not in L_SHIFTS:
        raise ValueError(f"t must be one of {L_SHIFTS}")
    L = L_series(precision)
    return L - t * series_dilate(L, t)

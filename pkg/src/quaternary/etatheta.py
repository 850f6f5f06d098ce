"""Eta products, the theta function, and Ligozat's modularity test."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping

from .numtheory import divisors, squarefree_kernel
from .qseries import QSeries, series_dilate

__all__ = [
    "EtaQuotient",
    "Classification",
    "LigozatReport",
    "eta_series",
    "theta_series",
    "eta_quotient_series",
    "theta_as_eta",
    "theta_product_quotient",
    "ligozat_classify",
    "parse_eta_spec",
]


@dataclass(frozen=True)
class EtaQuotient:
    """prod over delta of eta(delta z)**r_delta, with every delta dividing ``level``."""

    level: int
    exponents: tuple[tuple[int, int], ...]

    def __init__(self, level: int, exponents: Mapping[int, int] | tuple):
        if level < 1:
            raise ValueError("level must be positive")
        items = dict(exponents)
        for delta, r in items.items():
            if delta < 1 or level % delta:
                raise ValueError(f"{delta} is not a positive divisor of level {level}")
            if not isinstance(r, int):
                raise TypeError("eta exponents must be integers")
        cleaned = tuple(sorted((d, r) for d, r in items.items() if r != 0))
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "exponents", cleaned)

    @property
    def exponent_map(self) -> dict[int, int]:
        return dict(self.exponents)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.exponents), 2)

    @property
    def leading_exponent(self) -> int:
        """sum delta * r_delta: the order at infinity in units of 1/24."""
        return sum(d * r for d, r in self.exponents)

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        level = self.level * other.level // gcd(self.level, other.level)
        merged = self.exponent_map
        for d, r in other.exponents:
            merged[d] = merged.get(d, 0) + r
        return EtaQuotient(level, merged)

    def at_level(self, level: int) -> "EtaQuotient":
        return EtaQuotient(level, self.exponent_map)

    def __str__(self) -> str:
        return ",".join(f"{d}:{r}" for d, r in self.exponents)


def parse_eta_spec(text: str, level: int) -> EtaQuotient:
    """Parse ``"2:2,10:2"`` style input."""
    exps: dict[int, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            d, r = chunk.split(":")
            d, r = int(d), int(r)
        except ValueError:
            raise ValueError(f"cannot parse eta factor {chunk!r}; expected delta:exponent") from None
        exps[d] = exps.get(d, 0) + r
    if not exps:
        raise ValueError("empty eta specification")
    return EtaQuotient(level, exps)


@lru_cache(maxsize=32)
def eta_series(precision: int) -> QSeries:
    """prod_{n>=1} (1 - q^n), via Euler's pentagonal number theorem."""
    if precision < 1:
        raise ValueError("precision must be positive")
    c = [0] * precision
    k = 0
    while True:
        sign = -1 if k % 2 else 1
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 >= precision:
            break
        c[g1] += sign
        if k and g2 < precision:
            c[g2] += sign
        k += 1
    return QSeries.from_ints(c, precision)


@lru_cache(maxsize=32)
def theta_series(precision: int) -> QSeries:
    """phi(q) = sum over all integers n of q^(n^2)."""
    if precision < 1:
        raise ValueError("precision must be positive")
    c = [0] * precision
    c[0] = 1
    m = 1
    while m * m < precision:
        c[m * m] = 2
        m += 1
    return QSeries.from_ints(c, precision)


@lru_cache(maxsize=256)
def _eta_power(r: int, precision: int) -> QSeries:
    if r >= 0:
        return eta_series(precision) ** r
    return eta_series(precision).reciprocal() ** (-r)


def eta_quotient_series(eq: EtaQuotient, precision: int) -> QSeries:
    """q-expansion of an eta quotient whose leading power q^(e/24) is integral."""
    e = eq.leading_exponent
    if e % 24:
        raise ValueError(f"leading power q^({e}/24) is not integral")
    if e < 0:
        raise ValueError(f"leading power q^({e // 24}) is negative")
    shift = e // 24
    result = QSeries.one(precision)
    if shift >= precision:
        return QSeries.zero(precision)
    for delta, r in eq.exponents:
        factor = series_dilate(_eta_power(r, precision), delta)
        assert factor[0] == 1
        result = result * factor
    return result.shift(shift)


def theta_as_eta(a: int) -> EtaQuotient:
    """phi(q^a) = eta^5(2az) / (eta^2(az) eta^2(4az))."""
    return EtaQuotient(4 * a, {a: -2, 2 * a: 5, 4 * a: -2})


def theta_product_quotient(coeffs, level: int = 40) -> EtaQuotient:
    """Combined eta quotient of prod phi(q^a) over ``coeffs``."""
    out = EtaQuotient(level, {})
    for a in coeffs:
        out = out * theta_as_eta(a)
    return out.at_level(level)


class Classification(str, enum.Enum):
    NOT_MODULAR = "not_modular"
    MODULAR_FORM = "modular_form"
    CUSP_FORM = "cusp_form"


@dataclass(frozen=True)
class LigozatReport:
    level: int
    weight: Fraction
    l1_holds: bool
    l2_holds: bool
    l3_values: dict[int, Fraction] = field(compare=False)
    l4_holds: bool
    classification: Classification
    character_discriminant: int | None

    @property
    def character_kernel(self) -> int | None:
        """Squarefree part of the discriminant; it determines the character."""
        if self.character_discriminant is None:
            return None
        return squarefree_kernel(self.character_discriminant)

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "weight": str(self.weight),
            "L1": self.l1_holds,
            "L2": self.l2_holds,
            "L3": {str(d): str(v) for d, v in self.l3_values.items()},
            "L4": self.l4_holds,
            "classification": self.classification.value,
            "character_discriminant": self.character_discriminant,
            "character_kernel": self.character_kernel,
        }


def ligozat_classify(eq: EtaQuotient) -> LigozatReport:
    n = eq.level
    exps = eq.exponents
    l1 = sum(d * r for d, r in exps) % 24 == 0
    l2 = sum((n // d) * r for d, r in exps) % 24 == 0
    l3 = {
        d: sum(Fraction(gcd(d, delta) ** 2 * r, delta) for delta, r in exps)
        for d in divisors(n)
    }
    k = eq.weight
    l4 = k.denominator == 1
    if l1 and l2 and l4 and all(v > 0 for v in l3.values()):
        cls = Classification.CUSP_FORM
    elif l1 and l2 and l4 and all(v >= 0 for v in l3.values()):
        cls = Classification.MODULAR_FORM
    else:
        cls = Classification.NOT_MODULAR
    disc = None
    if l4:
        s = 1
        for d, r in exps:
            s *= d ** abs(r)
        disc = (-s) if int(k) % 2 else s
    return LigozatReport(n, k, l1, l2, l3, l4, cls, disc)

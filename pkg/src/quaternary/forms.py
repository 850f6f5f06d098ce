"""Diagonal quaternary forms with coefficients in {1, 2, 5, 10}."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .numtheory import DirichletChar

__all__ = ["QuadForm", "FORMS_BY_CHARACTER", "ALL_FORMS", "UNIVERSAL_FORMS", "parse_form"]

ALLOWED = (1, 2, 5, 10)


@dataclass(frozen=True, order=True)
class QuadForm:
    """a1*x1^2 + a2*x2^2 + a3*x3^2 + a4*x4^2 with a1 <= a2 <= a3 <= a4."""

    coefficients: tuple[int, int, int, int]

    def __post_init__(self):
        c = tuple(int(a) for a in self.coefficients)
        if len(c) != 4:
            raise ValueError("a quaternary form needs exactly four coefficients")
        if any(a not in ALLOWED for a in c):
            raise ValueError(f"coefficients must lie in {ALLOWED}, got {c}")
        if list(c) != sorted(c):
            raise ValueError(f"coefficients must be sorted, got {c}")
        if gcd(gcd(c[0], c[1]), gcd(c[2], c[3])) != 1:
            raise ValueError(f"coefficients {c} have a common factor")
        object.__setattr__(self, "coefficients", c)

    def __iter__(self):
        return iter(self.coefficients)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.coefficients)

    @property
    def label(self) -> str:
        return f"({str(self)})"


def parse_form(text: str) -> QuadForm:
    """Parse ``"1,1,2,5"``; the order of the entries does not matter."""
    try:
        parts = [int(p) for p in text.replace("(", "").replace(")", "").split(",")]
    except ValueError:
        raise ValueError(f"cannot parse form {text!r}") from None
    form = QuadForm(tuple(sorted(parts)))
    if form not in ALL_FORMS:
        raise ValueError(f"form {form.label} is not one of the 26 level-40 forms")
    return form


def _forms(*rows) -> tuple[QuadForm, ...]:
    return tuple(QuadForm(r) for r in rows)


# grouped by the character of prod phi(q^a_i), in table order
FORMS_BY_CHARACTER: dict[DirichletChar, tuple[QuadForm, ...]] = {
    DirichletChar.CHI0: _forms(
        (1, 1, 1, 1), (1, 1, 2, 2), (1, 1, 5, 5), (1, 1, 10, 10), (1, 2, 5, 10), (2, 2, 5, 5)
    ),
    DirichletChar.CHI1: _forms(
        (1, 1, 1, 5), (1, 1, 2, 10), (1, 2, 2, 5), (1, 5, 5, 5), (1, 5, 10, 10), (2, 5, 5, 10)
    ),
    DirichletChar.CHI2: _forms(
        (1, 1, 1, 2), (1, 1, 5, 10), (1, 2, 2, 2), (1, 2, 5, 5), (1, 2, 10, 10), (2, 2, 5, 10)
    ),
    DirichletChar.CHI3: _forms(
        (1, 1, 1, 10), (1, 1, 2, 5), (1, 2, 2, 10), (1, 5, 5, 10),
        (1, 10, 10, 10), (2, 2, 2, 5), (2, 5, 5, 5), (2, 5, 10, 10),
    ),
}

ALL_FORMS: tuple[QuadForm, ...] = tuple(f for fs in FORMS_BY_CHARACTER.values() for f in fs)

UNIVERSAL_FORMS = _forms((1, 1, 2, 5), (1, 1, 2, 10), (1, 2, 2, 5), (1, 2, 5, 10))

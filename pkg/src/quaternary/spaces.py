"""Bases of M_2(Gamma_0(40), chi) and exact decomposition of forms in them.

Generator order is fixed and matches the listing used throughout the
package:

* chi0: L(q) - t L(q^t) for t = 2, 4, 5, 8, 10, 20, 40, then A1, A2, A3
* chi1: E[chi0,chi1](q^t) for t = 1, 2, 4, 8, then E[chi1,chi0](q^t) for the
  same t, then B1, B2
* chi2: E[chi0,chi2](q), E[chi0,chi2](q^5), E[chi2,chi0](q), E[chi2,chi0](q^5),
  then C1..C4
* chi3: E[chi0,chi3], E[chi1,chi2], E[chi2,chi1], E[chi3,chi0], then D1..D4
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .eisenstein import L_SHIFTS, EisensteinSpec, eisenstein_series
from .etatheta import (
    EtaQuotient,
    eta_quotient_series,
    ligozat_classify,
    theta_product_quotient,
    theta_series,
)
from .forms import FORMS_BY_CHARACTER, QuadForm
from .linalg import independent_rows, rank, solve_square
from .numtheory import DirichletChar, squarefree_kernel
from .qseries import QSeries, series_dilate

__all__ = [
    "CUSP_QUOTIENTS",
    "DIMENSIONS",
    "SpaceId",
    "Generator",
    "Basis",
    "Decomposition",
    "NotInSpaceError",
    "SPACES",
    "sturm_bound",
    "gamma0_index",
    "build_basis",
    "basis_rank",
    "classify_form",
    "character_from_kernel",
    "solve_in_basis",
    "theta_product",
    "cusp_series",
]

C0, C1, C2, C3 = DirichletChar.CHI0, DirichletChar.CHI1, DirichletChar.CHI2, DirichletChar.CHI3

LEVEL = 40
WEIGHT = 2

CUSP_QUOTIENTS: dict[str, dict[int, int]] = {
    "A1": {2: 2, 10: 2},
    "A2": {4: 2, 20: 2},
    "A3": {2: -1, 4: 5, 8: -2, 10: 1, 20: -1, 40: 2},
    "B1": {2: 1, 10: -1, 20: 4},
    "B2": {2: -1, 4: 4, 10: 1},
    "C1": {1: 2, 2: -1, 8: 1, 10: 2, 20: -1, 40: 1},
    "C2": {1: 1, 4: -1, 5: 1, 8: 2, 10: -1, 20: 2},
    "C3": {1: -2, 2: 6, 4: -2, 10: 1, 20: -1, 40: 2},
    "C4": {2: -2, 4: 6, 5: 2, 8: -2, 10: -1, 20: 1},
    "D1": {1: 2, 2: -3, 4: 6, 8: -2, 20: 1},
    "D2": {5: 2, 8: 1, 10: 1, 20: -1, 40: 1},
    "D3": {1: 1, 5: 1, 10: -1, 20: 1, 40: 2},
    "D4": {1: 1, 2: -1, 4: 1, 5: 1, 8: 2},
}

# (Eisenstein dimension, cusp dimension)
DIMENSIONS: dict[DirichletChar, tuple[int, int]] = {
    C0: (7, 3),
    C1: (8, 2),
    C2: (4, 4),
    C3: (4, 4),
}

_KERNEL_TO_CHAR = {1: C0, 5: C1, 2: C2, 10: C3}


class NotInSpaceError(ValueError):
    """Raised when a series is not a combination of a basis."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class SpaceId:
    character: DirichletChar
    level: int = LEVEL
    weight: int = WEIGHT

    @property
    def dimensions(self) -> tuple[int, int]:
        return DIMENSIONS[self.character]

    @property
    def name(self) -> str:
        if self.character is C0:
            return f"M{self.weight}(Gamma0({self.level}))"
        return f"M{self.weight}(Gamma0({self.level}),{self.character})"


SPACES = {chi: SpaceId(chi) for chi in DirichletChar}


@dataclass(frozen=True)
class Generator:
    """One basis element.

    ``terms`` expresses an Eisenstein generator as a combination of
    E_{chi,psi}(q^t); cusp generators carry the name of their eta quotient.
    """

    name: str
    kind: str
    terms: tuple[tuple[tuple[DirichletChar, DirichletChar, int], Fraction], ...] = ()

    def series(self, precision: int) -> QSeries:
        if self.kind == "cusp":
            return cusp_series(self.name, precision)
        out = QSeries.zero(precision)
        for (chi, psi, t), c in self.terms:
            e = series_dilate(eisenstein_series(EisensteinSpec(chi, psi), precision), t)
            out = out + c * e
        return out


def _eis(chi, psi, t=1) -> Generator:
    base = EisensteinSpec(chi, psi).name
    name = f"{base}(q)" if t == 1 else f"{base}(q^{t})"
    return Generator(name, "eisenstein", (((chi, psi, t), Fraction(1)),))


def _L_minus(t: int) -> Generator:
    return Generator(
        f"L(q)-{t}L(q^{t})",
        "eisenstein",
        (((C0, C0, 1), Fraction(1)), ((C0, C0, t), Fraction(-t))),
    )


def _cusp(names) -> list[Generator]:
    return [Generator(n, "cusp") for n in names]


_GENERATORS: dict[DirichletChar, tuple[list[Generator], list[Generator]]] = {
    C0: ([_L_minus(t) for t in L_SHIFTS], _cusp(["A1", "A2", "A3"])),
    C1: (
        [_eis(C0, C1, t) for t in (1, 2, 4, 8)] + [_eis(C1, C0, t) for t in (1, 2, 4, 8)],
        _cusp(["B1", "B2"]),
    ),
    C2: (
        [_eis(C0, C2, 1), _eis(C0, C2, 5), _eis(C2, C0, 1), _eis(C2, C0, 5)],
        _cusp(["C1", "C2", "C3", "C4"]),
    ),
    C3: (
        [_eis(C0, C3), _eis(C1, C2), _eis(C2, C1), _eis(C3, C0)],
        _cusp(["D1", "D2", "D3", "D4"]),
    ),
}


@lru_cache(maxsize=64)
def cusp_series(name: str, precision: int) -> QSeries:
    return eta_quotient_series(EtaQuotient(LEVEL, CUSP_QUOTIENTS[name]), precision)


def gamma0_index(level: int) -> Fraction:
    """[SL2(Z) : Gamma0(level)] = level * prod over p | level of (1 + 1/p)."""
    primes = [p for p in range(2, level + 1) if level % p == 0 and all(p % d for d in range(2, p))]
    return level * prod((1 + Fraction(1, p) for p in primes), start=Fraction(1))


def sturm_bound(level: int, weight: int) -> int:
    if level < 1:
        raise ValueError("level must be positive")
    return int(weight * gamma0_index(level) / 12)


@dataclass(frozen=True)
class Basis:
    space: SpaceId
    eisenstein_part: tuple[Generator, ...]
    cusp_part: tuple[Generator, ...]
    precision: int

    @property
    def generators(self) -> tuple[Generator, ...]:
        return self.eisenstein_part + self.cusp_part

    def series(self) -> list[QSeries]:
        return [g.series(self.precision) for g in self.generators]

    def matrix(self, rows: int) -> list[list[Fraction]]:
        """Generators by coefficients q^0 .. q^(rows-1)."""
        return [[s[n] for n in range(rows)] for s in self.series()]

    def __len__(self) -> int:
        return len(self.generators)


def build_basis(space: SpaceId, precision: int) -> Basis:
    bound = sturm_bound(space.level, space.weight)
    if space.level != LEVEL or space.weight != WEIGHT:
        raise ValueError("only weight 2, level 40 spaces are available")
    if precision <= bound:
        raise ValueError(f"precision {precision} must exceed the Sturm bound {bound}")
    eis, cusp = _GENERATORS[space.character]
    return Basis(space, tuple(eis), tuple(cusp), precision)


def basis_rank(space: SpaceId) -> int:
    """Rank of the basis coefficient matrix on q^0 .. q^(Sturm bound)."""
    bound = sturm_bound(space.level, space.weight)
    return rank(build_basis(space, bound + 1).matrix(bound + 1))


def character_from_kernel(kernel: int) -> DirichletChar:
    try:
        return _KERNEL_TO_CHAR[kernel]
    except KeyError:
        raise ValueError(f"no level-40 character has squarefree discriminant {kernel}") from None


def classify_form(form: QuadForm) -> SpaceId:
    """Space containing prod phi(q^a_i), read off from Ligozat's character."""
    if not any(form in fs for fs in FORMS_BY_CHARACTER.values()):
        raise ValueError(f"form {form.label} is not one of the 26 level-40 forms")
    report = ligozat_classify(theta_product_quotient(form.coefficients, LEVEL))
    if report.character_discriminant is None:
        raise ValueError(f"theta product of {form.label} has non-integral weight")
    return SPACES[character_from_kernel(squarefree_kernel(report.character_discriminant))]


def theta_product(coeffs, precision: int) -> QSeries:
    """prod phi(q^a) over the given coefficients."""
    th = theta_series(precision)
    out = QSeries.one(precision)
    for a in coeffs:
        out = out * series_dilate(th, a)
    return out


@dataclass(frozen=True)
class Decomposition:
    space: SpaceId
    eisenstein_names: tuple[str, ...]
    eisenstein_coeffs: tuple[Fraction, ...]
    cusp_names: tuple[str, ...]
    cusp_coeffs: tuple[Fraction, ...]
    verified_to: int
    form: QuadForm | None = None

    @property
    def coefficients(self) -> dict[str, Fraction]:
        names = self.eisenstein_names + self.cusp_names
        return dict(zip(names, self.eisenstein_coeffs + self.cusp_coeffs))

    def eisenstein_terms(self) -> dict[tuple[DirichletChar, DirichletChar, int], Fraction]:
        """Collapse the Eisenstein part onto the series E_{chi,psi}(q^t)."""
        eis, _ = _GENERATORS[self.space.character]
        out: dict = {}
        for gen, c in zip(eis, self.eisenstein_coeffs):
            for key, w in gen.terms:
                out[key] = out.get(key, Fraction(0)) + c * w
        return {k: v for k, v in out.items() if v}

    def recombine(self, precision: int) -> QSeries:
        basis = build_basis(self.space, precision)
        out = QSeries.zero(precision)
        for g, c in zip(basis.generators, self.eisenstein_coeffs + self.cusp_coeffs):
            if c:
                out = out + c * g.series(precision)
        return out

    def to_dict(self) -> dict:
        return {
            "form": str(self.form) if self.form is not None else None,
            "space": self.space.name,
            "eisenstein": [
                {"generator": n, "coeff": _frac(c)}
                for n, c in zip(self.eisenstein_names, self.eisenstein_coeffs)
            ],
            "cusp": [
                {"generator": n, "coeff": _frac(c)}
                for n, c in zip(self.cusp_names, self.cusp_coeffs)
            ],
            "verified_to": self.verified_to,
        }


def _frac(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def solve_in_basis(target: QSeries, space: SpaceId, form: QuadForm | None = None) -> Decomposition:
    """Write ``target`` in the basis of ``space``.

    Coefficients are fixed by q^0 .. q^(Sturm bound); the result is then
    checked against every coefficient ``target`` carries.
    """
    bound = sturm_bound(space.level, space.weight)
    p = target.precision
    if p < 2 * bound + 1:
        raise ValueError(f"target precision {p} is below the required {2 * bound + 1}")
    basis = build_basis(space, p)
    gens = basis.series()
    rows = [[g[n] for g in gens] for n in range(bound + 1)]
    pivots = independent_rows(rows)
    if len(pivots) < len(gens):
        raise ArithmeticError(f"basis of {space.name} is degenerate on the first {bound + 1} terms")
    x = solve_square([rows[i] for i in pivots], [target[i] for i in pivots])

    recombined = QSeries.zero(p)
    for g, c in zip(gens, x):
        if c:
            recombined = recombined + c * g
    bad = recombined.first_mismatch(target)
    if bad is not None:
        raise NotInSpaceError(
            f"series is not in {space.name}: coefficient of q^{bad} differs", bad
        )
    k = len(basis.eisenstein_part)
    return Decomposition(
        space,
        tuple(g.name for g in basis.eisenstein_part),
        tuple(x[:k]),
        tuple(g.name for g in basis.cusp_part),
        tuple(x[k:]),
        p,
        form,
    )

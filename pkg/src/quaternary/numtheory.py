"""Kronecker symbol, the four level-40 characters, and divisor sums."""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import isqrt

__all__ = [
    "DirichletChar",
    "kronecker",
    "char_eval",
    "divisors",
    "sigma",
    "sigma_twisted",
    "squarefree_kernel",
]


class DirichletChar(enum.Enum):
    """The trivial character and the Kronecker characters (5/.), (8/.), (40/.)."""

    CHI0 = ("chi0", 1)
    CHI1 = ("chi1", 5)
    CHI2 = ("chi2", 8)
    CHI3 = ("chi3", 40)

    def __init__(self, label: str, modulus: int):
        self.label = label
        self.modulus = modulus

    def __call__(self, n: int) -> int:
        return char_eval(self, n)

    @classmethod
    def from_label(cls, label: str) -> "DirichletChar":
        for chi in cls:
            if chi.label == label:
                return chi
        raise ValueError(f"unknown character {label!r}")

    def __str__(self) -> str:
        return self.label


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for every pair of integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    # factor out powers of two: (a/2) is 0 for even a, else +-1 by a mod 8
    v = (n & -n).bit_length() - 1
    if v:
        if a % 2 == 0:
            return 0
        n >>= v
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


_CHAR_TOP = {DirichletChar.CHI1: 5, DirichletChar.CHI2: 8, DirichletChar.CHI3: 40}


def char_eval(chi: DirichletChar, n: int) -> int:
    if chi is DirichletChar.CHI0:
        return 1
    return kronecker(_CHAR_TOP[chi], n)


@lru_cache(maxsize=8192)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n >= 1 in increasing order, by trial division."""
    if n < 1:
        raise ValueError("divisors are only defined here for positive n")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return tuple(small + large[::-1])


def _as_positive_int(n) -> int | None:
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return None
        n = n.numerator
    if n != int(n):
        return None
    n = int(n)
    return n if n >= 1 else None


def sigma(n) -> int:
    """Sum of the positive divisors of n; 0 when n is not a positive integer.

    ``n`` may be a Fraction so ``sigma(Fraction(n, 4))`` reads like sigma(n/4).
    """
    m = _as_positive_int(n)
    if m is None:
        return 0
    return sum(divisors(m))


def sigma_twisted(chi: DirichletChar, psi: DirichletChar, n) -> int:
    """sum over m | n of psi(m) * chi(n/m) * m; 0 off the positive integers."""
    m_ = _as_positive_int(n)
    if m_ is None:
        return 0
    return sum(char_eval(psi, m) * char_eval(chi, m_ // m) * m for m in divisors(m_))


def squarefree_kernel(n: int) -> int:
    """Signed squarefree part of a nonzero integer (e.g. 400 -> 1, -12 -> -3)."""
    if n == 0:
        raise ValueError("0 has no squarefree kernel")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1
    return sign * out * n

"""Brute-force lattice point counts for a1 x1^2 + a2 x2^2 + a3 x3^2 + a4 x4^2 = n.

Deliberately shares nothing with the number-theoretic modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

__all__ = ["BinaryProfile", "binary_profile", "brute_count", "brute_table"]


@dataclass(frozen=True)
class BinaryProfile:
    """counts[m] = #{(x, y) in Z^2 : a x^2 + b y^2 = m} for m <= cap."""

    pair: tuple[int, int]
    counts: tuple[int, ...]

    @property
    def cap(self) -> int:
        return len(self.counts) - 1


def binary_profile(a: int, b: int, cap: int) -> BinaryProfile:
    counts = [0] * (cap + 1)
    for x in range(-isqrt(cap // a), isqrt(cap // a) + 1):
        ax = a * x * x
        rest = cap - ax
        ymax = isqrt(rest // b)
        for y in range(-ymax, ymax + 1):
            counts[ax + b * y * y] += 1
    return BinaryProfile((a, b), tuple(counts))


def _coefficients(form) -> tuple[int, int, int, int]:
    c = tuple(getattr(form, "coefficients", form))
    if len(c) != 4 or any(a < 1 for a in c):
        raise ValueError("need four positive coefficients")
    return c


def brute_table(form, max_n: int) -> list[int]:
    """Representation counts for n = 0 .. max_n."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    a1, a2, a3, a4 = _coefficients(form)
    left = binary_profile(a1, a2, max_n).counts
    right = binary_profile(a3, a4, max_n).counts
    right_nz = [(m, c) for m, c in enumerate(right) if c]
    table = [0] * (max_n + 1)
    for m, c in enumerate(left):
        if not c:
            continue
        for k, d in right_nz:
            if m + k > max_n:
                break
            table[m + k] += c * d
    return table


def brute_count(form, n: int) -> int:
    if n < 0:
        return 0
    a1, a2, a3, a4 = _coefficients(form)
    left = binary_profile(a1, a2, n).counts
    right = binary_profile(a3, a4, n).counts
    return sum(left[m] * right[n - m] for m in range(n + 1))

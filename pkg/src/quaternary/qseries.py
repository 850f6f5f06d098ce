"""Truncated power series in q with exact rational coefficients.

A series is stored densely as integer numerators over one common positive
denominator, which keeps products as plain integer convolutions.  Those
convolutions go through Kronecker substitution (pack coefficients into one
big integer, multiply, unpack), so CPython's Karatsuba multiply does the work.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "QSeries",
    "series_add",
    "series_mul",
    "series_scale",
    "series_dilate",
    "series_negate_q",
    "DEFAULT_PRECISION",
]

DEFAULT_PRECISION = 500


def _pack(values: Sequence[int], width: int) -> int:
    # values are all >= 0 and < 2**(8*width)
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in values), "little")


def _split_signs(values: Sequence[int]) -> tuple[list[int], list[int]]:
    pos = [v if v > 0 else 0 for v in values]
    neg = [-v if v < 0 else 0 for v in values]
    return pos, neg


def convolve(a: Sequence[int], b: Sequence[int], length: int) -> list[int]:
    """First ``length`` coefficients of the product of two integer sequences."""
    a = list(a[:length])
    b = list(b[:length])
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return [0] * length
    # sparse short-cut keeps theta-like inputs cheap
    if len(a) * len(b) < 4096 or sum(1 for x in a if x) * sum(1 for y in b if y) < 20000:
        out = [0] * length
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in bnz:
                k = i + j
                if k >= length:
                    break
                out[k] += x * y
        return out

    bound = max(abs(x) for x in a) * max(abs(y) for y in b) * min(len(a), len(b))
    width = (bound.bit_length() + 2) // 8 + 1
    ap, an = _split_signs(a)
    bp, bn = _split_signs(b)
    prod = (_pack(ap, width) - _pack(an, width)) * (_pack(bp, width) - _pack(bn, width))
    n_out = min(length, len(a) + len(b) - 1)
    half = 1 << (8 * width - 1)
    offset = _pack([half] * n_out, width)
    # bias every digit into [0, 2**(8*width)) so the bytes can be cut directly
    raw = ((prod + offset) & ((1 << (8 * width * n_out)) - 1)).to_bytes(width * n_out, "little")
    out = [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(n_out)
    ]
    out.extend([0] * (length - n_out))
    return out


class QSeries:
    """Immutable truncated series ``sum c_n q^n`` for ``0 <= n < precision``."""

    __slots__ = ("_num", "_den", "_prec")

    def __init__(self, coeffs: Iterable, precision: int | None = None):
        values = [Fraction(c) for c in coeffs]
        if precision is None:
            precision = len(values)
        if precision < 1:
            raise ValueError("precision must be positive")
        values = values[:precision] + [Fraction(0)] * (precision - len(values))
        den = 1
        for v in values:
            den = den * v.denominator // gcd(den, v.denominator)
        self._num = tuple(int(v * den) for v in values)
        self._den = den
        self._prec = precision
        self._normalize()

    @classmethod
    def _raw(cls, num: Sequence[int], den: int, precision: int) -> "QSeries":
        obj = cls.__new__(cls)
        obj._num = tuple(num)
        obj._den = den
        obj._prec = precision
        obj._normalize()
        return obj

    @classmethod
    def from_ints(cls, values: Sequence[int], precision: int | None = None) -> "QSeries":
        if precision is None:
            precision = len(values)
        num = list(values[:precision]) + [0] * (precision - len(values))
        return cls._raw(num, 1, precision)

    @classmethod
    def zero(cls, precision: int) -> "QSeries":
        return cls._raw([0] * precision, 1, precision)

    @classmethod
    def one(cls, precision: int) -> "QSeries":
        return cls.monomial(0, 1, precision)

    @classmethod
    def monomial(cls, n: int, c, precision: int) -> "QSeries":
        values = [Fraction(0)] * precision
        if n < precision:
            values[n] = Fraction(c)
        return cls(values, precision)

    def _normalize(self) -> None:
        if self._den == 1:
            return
        g = self._den
        for v in self._num:
            if g == 1:
                break
            g = gcd(g, v)
        if g > 1:
            self._num = tuple(v // g for v in self._num)
            self._den //= g

    @property
    def precision(self) -> int:
        return self._prec

    @property
    def is_integral(self) -> bool:
        return self._den == 1

    def __len__(self) -> int:
        return self._prec

    def __getitem__(self, n: int) -> Fraction:
        if not isinstance(n, int):
            raise TypeError("series index must be an int")
        if n < 0 or n >= self._prec:
            raise IndexError(f"coefficient q^{n} is beyond precision {self._prec}")
        return Fraction(self._num[n], self._den)

    def coefficients(self) -> list[Fraction]:
        return [Fraction(v, self._den) for v in self._num]

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises ValueError if any is fractional."""
        if self._den != 1:
            raise ValueError("series has non-integral coefficients")
        return list(self._num)

    def truncate(self, precision: int) -> "QSeries":
        if precision > self._prec:
            raise ValueError(f"cannot extend precision {self._prec} to {precision}")
        return QSeries._raw(self._num[:precision], self._den, precision)

    def first_mismatch(self, other: "QSeries") -> int | None:
        """Lowest index where the two series differ, within the shared precision."""
        p = min(self._prec, other._prec)
        for n in range(p):
            if self._num[n] * other._den != other._num[n] * self._den:
                return n
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self._prec == other._prec
            and self._den == other._den
            and self._num == other._num
        )

    def __hash__(self) -> int:
        return hash((self._num, self._den, self._prec))

    def __add__(self, other: "QSeries") -> "QSeries":
        return series_add(self, other)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return series_add(self, series_scale(-1, other))

    def __neg__(self) -> "QSeries":
        return series_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        return series_scale(other, self)

    def __rmul__(self, other):
        return series_scale(other, self)

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            return self.reciprocal() ** (-e)
        result = QSeries.one(self._prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def reciprocal(self) -> "QSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self._num[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        p = self._prec
        if c0 in (1, -1):
            # 1/(num/den) = den * (1/num); Newton steps g <- g*(2 - num*g)
            # double the number of correct terms and stay in the integers
            g = [c0]
            k = 1
            while k < p:
                k = min(2 * k, p)
                e = convolve(self._num, g, k)
                e = [-v for v in e]
                e[0] += 2
                g = convolve(g, e, k)
            return QSeries._raw([v * self._den for v in g], 1, p)
        coeffs = self.coefficients()
        inv = [Fraction(0)] * p
        inv[0] = 1 / coeffs[0]
        for n in range(1, p):
            s = sum(coeffs[k] * inv[n - k] for k in range(1, n + 1) if coeffs[k])
            inv[n] = -s * inv[0]
        return QSeries(inv, p)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q**k (k >= 0), keeping the precision."""
        if k < 0:
            raise ValueError("negative shifts would need a Laurent series")
        num = ([0] * k + list(self._num))[: self._prec]
        return QSeries._raw(num, self._den, self._prec)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coefficients()[:8])
        tail = ", ..." if self._prec > 8 else ""
        return f"QSeries([{shown}{tail}], precision={self._prec})"


def series_add(f: QSeries, g: QSeries) -> QSeries:
    p = min(f.precision, g.precision)
    den = f._den * g._den // gcd(f._den, g._den)
    mf, mg = den // f._den, den // g._den
    num = [f._num[i] * mf + g._num[i] * mg for i in range(p)]
    return QSeries._raw(num, den, p)


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    p = min(f.precision, g.precision)
    return QSeries._raw(convolve(f._num, g._num, p), f._den * g._den, p)


def series_scale(c, f: QSeries) -> QSeries:
    c = Fraction(c)
    return QSeries._raw([v * c.numerator for v in f._num], f._den * c.denominator, f.precision)


def series_dilate(f: QSeries, t: int) -> QSeries:
    """Substitute q -> q**t."""
    if t < 1:
        raise ValueError("dilation factor must be a positive integer")
    p = f.precision
    num = [0] * p
    for n in range(0, (p - 1) // t + 1):
        num[n * t] = f._num[n]
    return QSeries._raw(num, f._den, p)


def series_negate_q(f: QSeries) -> QSeries:
    """Substitute q -> -q."""
    num = [v if n % 2 == 0 else -v for n, v in enumerate(f._num)]
    return QSeries._raw(num, f._den, f.precision)

"""Exact counts of |W(m, n)| = |T(m, n)|.

Two independent routes: the binomial sum
``sum_{k=1}^{n} C(m+k, k) C(n-1, k-1)`` and the coefficient of ``x^n`` in
``((1-x)/(1-2x))^(m+1)``, extracted from dense truncated power series.  Both
use Python ints throughout, so nothing overflows.  For ``n = 0`` both return
1 (the empty word).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import TruncationTooShort

__all__ = [
    "IntSeries",
    "binomial",
    "closed_form_count",
    "series_geometric",
    "series_mul",
    "series_pow",
    "gf_coefficient",
]


def binomial(a: int, b: int) -> int:
    """C(a, b), and 0 whenever ``b < 0`` or ``b > a``."""
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def closed_form_count(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be nonnegative, got {m}, {n}")
    if n == 0:
        return 1
    return sum(binomial(m + k, k) * binomial(n - 1, k - 1) for k in range(1, n + 1))


@dataclass(frozen=True)
class IntSeries:
    """Power series with integer coefficients ``c_0..c_N``, known to order N."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        if j < 0:
            raise IndexError(j)
        if j > self.order:
            raise TruncationTooShort(self.order, j)
        return self.coeffs[j]

    def truncate(self, order: int) -> IntSeries:
        if order > self.order:
            raise TruncationTooShort(self.order, order)
        return IntSeries(self.coeffs[: order + 1])

    @classmethod
    def of(cls, coeffs: Sequence[int], order: int | None = None) -> IntSeries:
        """Exact polynomial ``coeffs`` viewed as a series, zero-padded to ``order``."""
        coeffs = list(coeffs)
        if order is not None:
            if len(coeffs) > order + 1:
                coeffs = coeffs[: order + 1]
            coeffs += [0] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))


def series_geometric(scale: int, order: int) -> IntSeries:
    """Expansion of ``1/(1 - scale*x)`` to order ``order``."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    out = [1] * (order + 1)
    for j in range(1, order + 1):
        out[j] = out[j - 1] * scale
    return IntSeries(tuple(out))


def series_mul(a: IntSeries, b: IntSeries, order: int) -> IntSeries:
    """Cauchy product of ``a`` and ``b`` truncated at ``order``."""
    for s in (a, b):
        if s.order < order:
            raise TruncationTooShort(s.order, order)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (order + 1)
    for i in range(order + 1):
        x = ac[i]
        if x:
            for j in range(order + 1 - i):
                out[i + j] += x * bc[j]
    return IntSeries(tuple(out))


def series_pow(a: IntSeries, e: int, order: int) -> IntSeries:
    """``a**e`` truncated at ``order``, by repeated squaring."""
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    if a.order < order:
        raise TruncationTooShort(a.order, order)
    result = IntSeries.of([1], order)
    base = a.truncate(order)
    while e:
        if e & 1:
            result = series_mul(result, base, order)
        e >>= 1
        if e:
            base = series_mul(base, base, order)
    return result


def gf_coefficient(m: int, n: int) -> int:
    """``[x^n] ((1-x)/(1-2x))^(m+1)``."""
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be nonnegative, got {m}, {n}")
    ratio = series_mul(IntSeries.of([1, -1], n), series_geometric(2, n), n)
    return series_pow(ratio, m + 1, n)[n]

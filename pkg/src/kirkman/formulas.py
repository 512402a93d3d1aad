"""The coefficient array behind Kirkman's identity, by three constructions.

The object of study is the bivariate power series f(z, w) with f(0, 0) = 1
solving

    z(z+w) f^2 + (2z+w-1) f + 1 = 0.

Its coefficients interpolate Catalan numbers ([z^m w^0] f = Catalan(m+1))
and the geometric row ([z^0 w^n] f = 1).  This module provides:

  * ``closed_form_coeff`` -- the binomial closed form for [z^m w^n] f^p,
  * ``fixpoint_series``   -- f by fixpoint iteration on the quadratic,
  * ``radical_series``    -- f from its radical expression, as an
                             independent witness,
  * ``power_series``      -- f^p by truncated powering.

All routes agree cellwise; the verifier module sweeps that agreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import BiSeries, Rect, poly


@dataclass(frozen=True)
class KirkmanIndex:
    """Position (m, n) in the coefficient table of the p-th power."""

    p: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError(f"power must be >= 1, got {self.p}")
        if self.m < 0 or self.n < 0:
            raise ValueError(f"exponents must be non-negative, got ({self.m}, {self.n})")


def binomial(a: int, b: int) -> int:
    """C(a, b) for a >= 0, with the convention 0 outside 0 <= b <= a."""
    if a < 0:
        raise ValueError("negative upper index unsupported")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


@lru_cache(maxsize=None)
def closed_form_coeff(p: int, m: int, n: int) -> int:
    """[z^m w^n] f^p = (p/(m+p)) C(m+n+p-1, n) C(2m+n+2p, m+n+2p).

    Evaluated exactly in rationals; the result is always an integer (the
    prefactor p/(m+p) cancels against the binomials), and that integrality
    is asserted rather than assumed.
    """
    KirkmanIndex(p, m, n)
    value = (
        Fraction(p, m + p)
        * binomial(m + n + p - 1, n)
        * binomial(2 * m + n + 2 * p, m + n + 2 * p)
    )
    if value.denominator != 1:
        raise ArithmeticError(f"integrality violated at p={p} m={m} n={n}: {value}")
    return int(value)


def fixpoint_series(window: Rect) -> BiSeries:
    """f on ``window`` as the power-series root of the defining quadratic.

    Iterates f <- 1 + (2z+w) f + z(z+w) f^2 starting from 1.  Both update
    multipliers have total degree >= 1, so each pass raises the total-degree
    valuation of the error by at least one: after max_a + max_b passes the
    table is exact on the window.  The iteration converges to the root with
    constant term 1; the other root of the quadratic is not a power series.
    """
    one = BiSeries.one(window)
    linear = poly(window, {(1, 0): 2, (0, 1): 1})
    quadratic = poly(window, {(2, 0): 1, (1, 1): 1})
    f = one
    for _ in range(window.max_a + window.max_b):
        f = one + linear * f + quadratic * (f * f)
    return f


def radical_series(window: Rect) -> BiSeries:
    """f on ``window`` from (1 - w - 2z - sqrt((1-w)^2 - 4z)) / (2z(z+w)).

    Exists as an independent witness for the fixpoint construction.  The
    numerator is built on a padded rectangle, since dividing by (z+w)
    consumes max_b extra degrees of z on top of the one consumed by the
    division by z.  The square root branch with constant term +1 restricts
    to 1 - w on the z^0 row, so the numerator's z^0 row cancels exactly.
    """
    padded = Rect(window.max_a + window.max_b + 2, window.max_b)
    radicand = poly(padded, {(0, 0): 1, (0, 1): -2, (0, 2): 1, (1, 0): -4})
    root = radicand.sqrt()
    numerator = poly(padded, {(0, 0): 1, (0, 1): -1, (1, 0): -2}) - root
    halved = numerator.div_z().scale(Fraction(1, 2))
    return halved.div_z_plus_w(window)


def power_series(p: int, window: Rect) -> BiSeries:
    """f^p on ``window``; cell (m, n) equals closed_form_coeff(p, m, n)."""
    if p < 1:
        raise ValueError(f"power must be >= 1, got {p}")
    return fixpoint_series(window) ** p

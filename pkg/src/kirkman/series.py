"""Exact truncated bivariate formal power series over the rationals.

A series is stored as a dense table of ``Fraction`` coefficients on a
rectangular window (independent degree caps for the two variables).  The
window is closed under all operations here: coefficient (a, b) of a product
only reads inputs at indices (i, j) with i <= a and j <= b, so arithmetic on
the window is exact for the represented terms.  Variables are positional;
the same type serves series in (z, w) and in (y, w).

Values are immutable after construction and every operation is a pure
function, so instances may be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Rect:
    """Truncation rectangle: inclusive degree caps for the two variables."""

    max_a: int
    max_b: int

    def __post_init__(self) -> None:
        if self.max_a < 0 or self.max_b < 0:
            raise ValueError(f"rectangle bounds must be non-negative, got {self}")

    def contains(self, a: int, b: int) -> bool:
        return 0 <= a <= self.max_a and 0 <= b <= self.max_b

    def cells(self) -> Iterator[tuple[int, int]]:
        """All indices in the rectangle, first variable outer, ascending."""
        for a in range(self.max_a + 1):
            for b in range(self.max_b + 1):
                yield a, b

    def __str__(self) -> str:
        return f"({self.max_a}, {self.max_b})"


def _graded_cells(max_a: int, max_b: int) -> Iterator[tuple[int, int]]:
    # Total degree first, then lexicographic.  The coefficient recurrences
    # below only need an order refining total degree; fixing this one makes
    # runs reproducible.
    for d in range(max_a + max_b + 1):
        for a in range(max(0, d - max_b), min(d, max_a) + 1):
            yield a, d - a


@dataclass(frozen=True, repr=False)
class BiSeries:
    """A bivariate series truncated to ``rect``, with exact rational cells.

    ``coeff[a][b]`` is the coefficient of (first variable)^a (second
    variable)^b.  Every cell inside the rectangle is materialised; absent
    terms are explicit zeros.
    """

    rect: Rect
    coeff: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.coeff) != self.rect.max_a + 1 or any(
            len(row) != self.rect.max_b + 1 for row in self.coeff
        ):
            raise ValueError("coefficient table does not match rectangle")

    # ---- construction ----

    @classmethod
    def from_table(
        cls,
        rect: Rect,
        entries: Mapping[tuple[int, int], Scalar]
        | Iterable[tuple[tuple[int, int], Scalar]],
    ) -> BiSeries:
        """Series with the given coefficients and zeros elsewhere."""
        if isinstance(entries, Mapping):
            entries = entries.items()
        table = [[_ZERO] * (rect.max_b + 1) for _ in range(rect.max_a + 1)]
        seen: set[tuple[int, int]] = set()
        for (a, b), value in entries:
            if not rect.contains(a, b):
                raise ValueError(f"index out of rectangle: ({a}, {b}) not in {rect}")
            if (a, b) in seen:
                raise ValueError(f"duplicate index ({a}, {b})")
            seen.add((a, b))
            table[a][b] = Fraction(value)
        return cls(rect, tuple(tuple(row) for row in table))

    @classmethod
    def zero(cls, rect: Rect) -> BiSeries:
        return cls(rect, tuple((_ZERO,) * (rect.max_b + 1) for _ in range(rect.max_a + 1)))

    @classmethod
    def one(cls, rect: Rect) -> BiSeries:
        return cls.from_table(rect, {(0, 0): 1})

    # ---- lookup ----

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        a, b = index
        if not self.rect.contains(a, b):
            raise IndexError(f"index out of rectangle: ({a}, {b}) not in {self.rect}")
        return self.coeff[a][b]

    def restrict(self, rect: Rect) -> BiSeries:
        """Truncation to a sub-rectangle."""
        if rect.max_a > self.rect.max_a or rect.max_b > self.rect.max_b:
            raise ValueError(f"rectangle out of range: {rect} not inside {self.rect}")
        return BiSeries(
            rect,
            tuple(tuple(row[: rect.max_b + 1]) for row in self.coeff[: rect.max_a + 1]),
        )

    def equals_on(self, other: BiSeries, rect: Rect) -> bool:
        """Exact cellwise comparison on ``rect``."""
        for series in (self, other):
            if rect.max_a > series.rect.max_a or rect.max_b > series.rect.max_b:
                raise ValueError(f"rectangle out of range: {rect} not inside {series.rect}")
        return all(self.coeff[a][b] == other.coeff[a][b] for a, b in rect.cells())

    # ---- ring operations ----

    def _require_same_rect(self, other: BiSeries) -> None:
        if self.rect != other.rect:
            raise ValueError(f"rectangle mismatch: {self.rect} vs {other.rect}")

    def __add__(self, other: BiSeries) -> BiSeries:
        self._require_same_rect(other)
        return BiSeries(
            self.rect,
            tuple(
                tuple(x + y for x, y in zip(row_x, row_y))
                for row_x, row_y in zip(self.coeff, other.coeff)
            ),
        )

    def __sub__(self, other: BiSeries) -> BiSeries:
        self._require_same_rect(other)
        return BiSeries(
            self.rect,
            tuple(
                tuple(x - y for x, y in zip(row_x, row_y))
                for row_x, row_y in zip(self.coeff, other.coeff)
            ),
        )

    def scale(self, factor: Scalar) -> BiSeries:
        f = Fraction(factor)
        return BiSeries(self.rect, tuple(tuple(f * v for v in row) for row in self.coeff))

    def __mul__(self, other: BiSeries) -> BiSeries:
        """Truncated product: cell (a, b) is sum of x[i,j] * y[a-i,b-j]."""
        self._require_same_rect(other)
        x, y = self.coeff, other.coeff
        max_a, max_b = self.rect.max_a, self.rect.max_b
        rows = []
        for a in range(max_a + 1):
            row = []
            for b in range(max_b + 1):
                acc = _ZERO
                for i in range(a + 1):
                    xi = x[i]
                    yk = y[a - i]
                    for j in range(b + 1):
                        v = xi[j]
                        if v:
                            acc += v * yk[b - j]
                row.append(acc)
            rows.append(tuple(row))
        return BiSeries(self.rect, tuple(rows))

    def __pow__(self, exponent: int) -> BiSeries:
        """Truncated power by binary exponentiation; exponent 0 gives 1."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = BiSeries.one(self.rect)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # ---- inverses ----

    def reciprocal(self) -> BiSeries:
        """Multiplicative inverse on the rectangle.

        Coefficients are produced in graded-lexicographic order by the
        recurrence r[a,b] = -(sum of x[i,j] r[a-i,b-j] over (i,j) != (0,0))
        / x[0,0]; every referenced cell has strictly smaller total degree.
        """
        x = self.coeff
        if x[0][0] == 0:
            raise ValueError("not invertible: zero constant term")
        max_a, max_b = self.rect.max_a, self.rect.max_b
        inv = _ONE / x[0][0]
        out: list[list[Fraction]] = [[_ZERO] * (max_b + 1) for _ in range(max_a + 1)]
        out[0][0] = inv
        for a, b in _graded_cells(max_a, max_b):
            if a == 0 and b == 0:
                continue
            acc = _ZERO
            for i in range(a + 1):
                xi = x[i]
                oi = out[a - i]
                for j in range(b + 1):
                    if i == 0 and j == 0:
                        continue
                    acc += xi[j] * oi[b - j]
            out[a][b] = -inv * acc
        return BiSeries(self.rect, tuple(tuple(row) for row in out))

    def sqrt(self) -> BiSeries:
        """Square root with constant term +1.

        Only radicands with constant term exactly 1 are supported; the sign
        choice is fixed to +1.  Graded-lexicographic recurrence
        s[a,b] = (x[a,b] - sum of interior products) / 2, where the interior
        excludes the two boundary pairings with s[0,0] and s[a,b].
        """
        x = self.coeff
        if x[0][0] != 1:
            raise ValueError("unsupported radicand: constant term must be 1")
        max_a, max_b = self.rect.max_a, self.rect.max_b
        out: list[list[Fraction]] = [[_ZERO] * (max_b + 1) for _ in range(max_a + 1)]
        out[0][0] = _ONE
        for a, b in _graded_cells(max_a, max_b):
            if a == 0 and b == 0:
                continue
            acc = _ZERO
            for i in range(a + 1):
                oi = out[i]
                ok = out[a - i]
                for j in range(b + 1):
                    if (i == 0 and j == 0) or (i == a and j == b):
                        continue
                    acc += oi[j] * ok[b - j]
            out[a][b] = (x[a][b] - acc) / 2
        return BiSeries(self.rect, tuple(tuple(row) for row in out))

    # ---- exact divisions ----

    def div_z(self) -> BiSeries:
        """Exact division by the first variable (drops the a=0 row)."""
        if self.rect.max_a < 1:
            raise ValueError("rectangle too small to divide by the first variable")
        for b, value in enumerate(self.coeff[0]):
            if value != 0:
                raise ValueError(f"not divisible by z: nonzero coefficient at (0, {b})")
        return BiSeries(Rect(self.rect.max_a - 1, self.rect.max_b), self.coeff[1:])

    def div_z_plus_w(self, target: Rect) -> BiSeries:
        """Exact division by (z + w), truncated to ``target``.

        Quotient cell (a, n) telescopes along the anti-diagonal:
        b[a,n] = sum over k of (-1)^k x[a+1+k, n-k], which consumes input
        degrees up to a + n + 1 in the first variable.  The input must
        therefore be padded to (target.max_a + target.max_b + 1, target.max_b)
        at least.  Divisibility is checked through the a=0 residual row.
        """
        need_a = target.max_a + target.max_b + 1
        if self.rect.max_a < need_a or self.rect.max_b < target.max_b:
            raise ValueError(
                f"insufficient padding: division by z+w onto {target} needs a rectangle "
                f"of at least ({need_a}, {target.max_b}), got {self.rect}"
            )
        x = self.coeff
        rows = []
        for a in range(target.max_a + 1):
            row = []
            for n in range(target.max_b + 1):
                acc = _ZERO
                for k in range(n + 1):
                    if k % 2 == 0:
                        acc += x[a + 1 + k][n - k]
                    else:
                        acc -= x[a + 1 + k][n - k]
                row.append(acc)
            rows.append(tuple(row))
        quotient = BiSeries(target, tuple(rows))
        if x[0][0] != 0:
            raise ValueError("not divisible by z+w: nonzero constant term")
        for n in range(1, target.max_b + 1):
            if x[0][n] != quotient.coeff[0][n - 1]:
                raise ValueError(f"not divisible by z+w: residual at (0, {n})")
        return quotient

    def __repr__(self) -> str:
        return f"<BiSeries on {self.rect}>"


def poly(rect: Rect, terms: Mapping[tuple[int, int], Scalar]) -> BiSeries:
    """Polynomial truncated to ``rect``; terms outside the window are dropped.

    Convenience for building fixed multipliers (2z + w, z^2 + zw, ...) on
    windows that may be too small to hold every monomial.
    """
    inside = {index: value for index, value in terms.items() if rect.contains(*index)}
    return BiSeries.from_table(rect, inside)

"""Even moment sequences of convolution powers of the semicircle law.

Writing d(m, n) for the 2n-th moment of the m-fold power, the sequences obey

    d(m, 0) = 1,      d(1, n) = catalan(n),
    d(m, n) = sum_{k=1..n} d(m, n-k) * sum_{j=1..m} d(j, k-1),

and for m = 2 specifically the self-contained form

    d(n) = sum_{k=1..n} d(n-k) * (d(k-1) + catalan(k-1)).

For fixed n, d(m, n) is a polynomial of degree n in m with constant term 0
(for n >= 1); its linear coefficient is the 2n-th monotone cumulant of the
semicircle law.  Everything here is exact integer/rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import DensePolynomial, interpolate
from .partitions import catalan


class MomentTable:
    """Memoized triangular fill of d(m, n); rows for all j <= m are retained
    because the recurrence consumes every lower row."""

    def __init__(self) -> None:
        self._rows: dict[int, list[int]] = {}
        self._colsums: dict[int, list[int]] = {}  # m -> [sum_{j<=m} d(j, r)]_r

    def _fill(self, m: int, n_max: int) -> None:
        for j in range(1, m + 1):
            row = self._rows.setdefault(j, [1])
            sums = self._colsums.setdefault(j, [j])
            below = self._colsums.get(j - 1)
            while len(row) <= n_max:
                n = len(row)
                if j == 1:
                    value = catalan(n)
                else:
                    value = sum(row[n - k] * sums[k - 1] for k in range(1, n + 1))
                row.append(value)
                sums.append((below[n] if j > 1 else 0) + value)

    def moment(self, m: int, n: int) -> int:
        """d(m, n): the 2n-th moment of the m-fold power, exactly."""
        if m < 1:
            raise ValueError("m must be at least 1")
        if n < 0:
            raise ValueError("n must be nonnegative")
        self._fill(m, n)
        return self._rows[m][n]

    def row(self, m: int, n_max: int) -> list[int]:
        self._fill(m, n_max)
        return self._rows[m][: n_max + 1]


_TABLE = MomentTable()


def moments_general(m: int, n_max: int) -> list[int]:
    """d(m, 0..n_max) via the general recurrence (shared memo table)."""
    return _TABLE.row(m, n_max)


def moment(m: int, n: int) -> int:
    return _TABLE.moment(m, n)


def moments_m2(n_max: int) -> list[int]:
    """The m = 2 sequence by its self-contained recurrence.

    Deliberately independent of :func:`moments_general` so the two can be
    cross-checked against each other.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    d = [1]
    for n in range(1, n_max + 1):
        d.append(sum(d[n - k] * (d[k - 1] + catalan(k - 1)) for k in range(1, n + 1)))
    return d


@dataclass(frozen=True)
class PolynomialInM:
    """d(., n) as an exact polynomial in the convolution power m."""

    n: int
    poly: DensePolynomial


class MomentPolynomialError(RuntimeError):
    """Interpolant failed its out-of-sample consistency check."""


def moment_polynomial(n: int) -> PolynomialInM:
    """Degree-n polynomial p with p(m) = d(m, n) for every m >= 1.

    Built by exact interpolation at m = 0..n, taking the value at m = 0 to
    be 0 for n >= 1 (the polynomial has a simple root there; the recurrence
    itself never consumes an m = 0 value).  The interpolant is then verified
    against the recurrence at m = n+1 and n+2.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return PolynomialInM(0, DensePolynomial.constant(1))
    points = [(0, 0)] + [(m, moment(m, n)) for m in range(1, n + 1)]
    poly = interpolate(points)
    for m in (n + 1, n + 2):
        if poly(m) != moment(m, n):
            raise MomentPolynomialError(
                f"degree-{n} interpolant misses the recurrence value at m={m}"
            )
    if poly.degree != n or poly.coefficient(0) != 0:
        raise MomentPolynomialError(f"interpolant for n={n} has the wrong shape")
    return PolynomialInM(n, poly)


@dataclass(frozen=True)
class CumulantSequence:
    """Monotone cumulants r_1..r_k of the semicircle law; odd entries are 0."""

    values: tuple[Fraction, ...]  # values[k-1] is r_k

    def __getitem__(self, k: int) -> Fraction:
        if not 1 <= k <= len(self.values):
            raise IndexError(f"cumulant index {k} out of range")
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)


def monotone_cumulants(k_max: int) -> CumulantSequence:
    """r_k for k = 1..k_max: zero for odd k, and for even k = 2n the linear
    coefficient (in m) of the degree-n moment polynomial."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    values: list[Fraction] = []
    for k in range(1, k_max + 1):
        if k % 2 == 1:
            values.append(Fraction(0))
        else:
            values.append(moment_polynomial(k // 2).poly.coefficient(1))
    return CumulantSequence(tuple(values))


# Tabulated reference values r_1..r_20 for cross-checking.  Entry 18 is
# inconsistent with the computed linear coefficient (121/40 vs 121/140); the
# comparison below reports rather than asserts.
REFERENCE_CUMULANTS: tuple[Fraction, ...] = (
    Fraction(0), Fraction(1),
    Fraction(0), Fraction(1, 2),
    Fraction(0), Fraction(1, 2),
    Fraction(0), Fraction(7, 12),
    Fraction(0), Fraction(2, 3),
    Fraction(0), Fraction(13, 20),
    Fraction(0), Fraction(9, 20),
    Fraction(0), Fraction(71, 280),
    Fraction(0), Fraction(121, 40),
    Fraction(0), Fraction(19, 7),
)


@dataclass(frozen=True)
class CumulantComparison:
    k: int
    computed: Fraction
    reference: Fraction
    equal: bool


def cumulant_comparison(k_min: int = 1, k_max: int = 20) -> list[CumulantComparison]:
    """Side-by-side report of computed cumulants vs the reference table.

    Assert-free by design: the reference list is known to disagree with the
    computed values in at least one late entry.
    """
    if not 1 <= k_min <= k_max <= len(REFERENCE_CUMULANTS):
        raise ValueError("cumulant comparison range out of the tabulated window")
    computed = monotone_cumulants(k_max)
    return [
        CumulantComparison(k, computed[k], REFERENCE_CUMULANTS[k - 1],
                           computed[k] == REFERENCE_CUMULANTS[k - 1])
        for k in range(k_min, k_max + 1)
    ]


def hankel_leading_minors(m: int, size: int) -> list[Fraction]:
    """Leading principal minors of [d(m, i+j)] for 0 <= i, j < size, exact.

    Fraction-exact Gaussian elimination without pivoting: the k-th pivot is
    the ratio of consecutive leading minors, so a zero pivot means the minor
    is zero and the remaining ones are reported as zero too (elimination
    cannot proceed; positivity has already failed at that order).
    """
    mat = [[Fraction(moment(m, i + j)) for j in range(size)] for i in range(size)]
    minors: list[Fraction] = []
    det = Fraction(1)
    for k in range(size):
        if mat[k][k] == 0:
            minors.extend([Fraction(0)] * (size - k))
            return minors
        det *= mat[k][k]
        minors.append(det)
        inv = 1 / mat[k][k]
        for r in range(k + 1, size):
            factor = mat[r][k] * inv
            if factor == 0:
                continue
            for c in range(k, size):
                mat[r][c] -= factor * mat[k][c]
    return minors


def hankel_positive(m: int, size: int) -> bool:
    """Positive-definiteness (via leading minors) of the even-moment Hankel matrix."""
    return all(minor > 0 for minor in hankel_leading_minors(m, size))


def symmetric_moments(m: int, order: int) -> list[Fraction]:
    """Full moment list mu_0..mu_{2*order} of the m-fold power: odd entries
    vanish, even entry 2n is d(m, n).  Input format for the Jacobi solver."""
    out: list[Fraction] = []
    for k in range(2 * order + 1):
        out.append(Fraction(moment(m, k // 2)) if k % 2 == 0 else Fraction(0))
    return out

"""Exact scalars and dense polynomials shared by every other module.

Scalars are stdlib :class:`fractions.Fraction` values: arbitrary precision,
always in lowest terms, denominator positive.  Everything in here stays
exact; floating point is confined to :mod:`monosemi.transforms`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce to an exact rational; floats are rejected, never rounded."""
    if isinstance(value, float):
        raise TypeError(f"refusing to coerce float {value!r} to an exact rational")
    return Fraction(value)


def rational_to_str(value: RationalLike) -> str:
    """Wire format used in all JSON/CSV output: ``p/q``, or bare ``p`` when q == 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
    """Inverse of :func:`rational_to_str` (Fraction already parses both forms)."""
    return Fraction(text)


class DensePolynomial:
    """Immutable dense univariate polynomial; coefficient index = degree.

    The zero polynomial is stored as a single zero coefficient; any other
    polynomial has a nonzero leading coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike]) -> None:
        cs = [as_rational(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("DensePolynomial is immutable")

    @classmethod
    def zero(cls) -> "DensePolynomial":
        return cls([0])

    @classmethod
    def constant(cls, c: RationalLike) -> "DensePolynomial":
        return cls([c])

    @classmethod
    def identity(cls) -> "DensePolynomial":
        """The polynomial p(x) = x."""
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x**k (zero beyond the stored degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        """Exact Horner evaluation."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "DensePolynomial") -> "DensePolynomial":
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return DensePolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __sub__(self, other: "DensePolynomial") -> "DensePolynomial":
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "DensePolynomial":
        return DensePolynomial(-c for c in self.coeffs)

    def __mul__(self, other) -> "DensePolynomial":
        if isinstance(other, DensePolynomial):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return DensePolynomial(out)
        scalar = as_rational(other)
        return DensePolynomial(c * scalar for c in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"DensePolynomial({list(self.coeffs)!r})"


def interpolate(points: Sequence[tuple[RationalLike, RationalLike]]) -> DensePolynomial:
    """Exact Newton divided-difference interpolant through the given points.

    Raises ValueError on duplicate abscissae.  The result has degree at most
    ``len(points) - 1`` and passes through every point exactly.
    """
    if not points:
        raise ValueError("need at least one interpolation point")
    xs = [as_rational(x) for x, _ in points]
    ys = [as_rational(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation data")

    # divided-difference table, in place
    coef = list(ys)
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])

    # unfold the Newton form into dense coefficients
    poly = DensePolynomial.constant(coef[n - 1])
    for k in range(n - 2, -1, -1):
        poly = poly * DensePolynomial([-xs[k], 1]) + DensePolynomial.constant(coef[k])
    return poly

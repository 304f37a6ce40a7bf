"""Monic orthogonal polynomials of a symmetric moment sequence.

Given exact moments mu_0, mu_1, ... of an even measure (odd entries zero),
the three-term recurrence coefficients come out of the classical
moment-to-recurrence table kept entirely in rational arithmetic, so the
resulting polynomials are exact.  For an even measure every recurrence is
simply p_{n+1} = x p_n - beta_n p_{n-1}; the alpha coefficients vanish and
are asserted to, not computed around.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import DensePolynomial, as_rational


class NotPositiveDefiniteError(ValueError):
    """Moment sequence fails positive-definiteness at some order."""

    def __init__(self, order: int) -> None:
        super().__init__(f"moment sequence is not positive definite at order {order}")
        self.order = order


@dataclass(frozen=True)
class JacobiCoefficients:
    """Recurrence data p_{n+1} = (x - alpha_n) p_n - beta_n p_{n-1}.

    ``beta[k]`` holds beta_{k+1}, the first coefficient the recurrence
    actually uses (beta_0 never enters for monic p_0 = 1, p_{-1} = 0).
    For the symmetric measures handled here every alpha is zero.
    """

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.beta) + 1


def jacobi_from_moments(moments: list, order: int) -> JacobiCoefficients:
    """Exact recurrence coefficients from moments mu_0..mu_{2*order - 1}.

    Builds the table sigma[k][l] with sigma[0][l] = mu_l and

        sigma[k][l] = sigma[k-1][l+1] - beta_{k-1} sigma[k-2][l],

    giving beta_k = sigma[k][k] / sigma[k-1][k-1].  A nonpositive diagonal
    entry means the moment functional is not positive definite at that
    order and raises :class:`NotPositiveDefiniteError`.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    mu = [as_rational(v) for v in moments]
    if len(mu) < 2 * order:
        raise ValueError(f"need at least {2 * order} moments for order {order}")
    if mu[0] != 1:
        raise ValueError("normalize the sequence: mu_0 must be 1")
    if any(v != 0 for v in mu[1::2]):
        raise ValueError("odd moments must vanish (symmetric measure expected)")

    sigma_prev: list[Fraction] = []  # row k-2, offset by its own k
    sigma_cur: list[Fraction] = mu[: 2 * order]  # row k-1 = 0 at first, full width
    alpha: list[Fraction] = [Fraction(0)]
    beta: list[Fraction] = []
    if sigma_cur[0] <= 0:
        raise NotPositiveDefiniteError(0)

    for k in range(1, order):
        width = 2 * order - 2 * k
        row = [Fraction(0)] * width
        for idx in range(width):
            # row k stores sigma[k][k + idx]
            value = sigma_cur[idx + 2]
            if k >= 2:
                value -= beta[k - 2] * sigma_prev[idx + 2]
            row[idx] = value
        if row[0] <= 0:
            raise NotPositiveDefiniteError(k)
        # verification that the measure really is even: the alpha formula
        # sigma[k][k+1]/sigma[k][k] - sigma[k-1][k]/sigma[k-1][k-1] must vanish
        a_k = row[1] / row[0] - sigma_cur[1] / sigma_cur[0]
        assert a_k == 0, f"nonzero alpha_{k} = {a_k} for symmetric input"
        alpha.append(Fraction(0))
        beta.append(row[0] / sigma_cur[0])
        sigma_prev, sigma_cur = sigma_cur, row
    return JacobiCoefficients(alpha=tuple(alpha), beta=tuple(beta))


def monic_orthogonal_polys(jc: JacobiCoefficients, n_max: int) -> list[DensePolynomial]:
    """[p_0, ..., p_n_max] by unrolling the recurrence exactly."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > len(jc.beta) + 1:
        raise ValueError(f"coefficients only support degree {len(jc.beta) + 1}")
    polys = [DensePolynomial.constant(1)]
    if n_max >= 1:
        polys.append(DensePolynomial.identity())
    x = DensePolynomial.identity()
    for n in range(1, n_max):
        polys.append(x * polys[n] - jc.beta[n - 1] * polys[n - 1])
    return polys


def moment_functional(poly: DensePolynomial, moments: list) -> Fraction:
    """Apply the linear functional x^k -> mu_k to a polynomial, exactly."""
    mu = [as_rational(v) for v in moments]
    if poly.degree >= len(mu):
        raise ValueError("polynomial degree exceeds available moments")
    return sum((c * mu[k] for k, c in enumerate(poly.coeffs)), Fraction(0))


@dataclass(frozen=True)
class OrthogonalityReport:
    passed: bool
    failures: tuple[tuple[int, int, Fraction], ...]
    norms: tuple[Fraction, ...]


def verify_orthogonality(polys: list[DensePolynomial], moments: list) -> OrthogonalityReport:
    """Exact check that the moment functional annihilates p_i * p_j for i != j.

    Also returns the squared norms <p_n, p_n>; for coefficients produced by
    :func:`jacobi_from_moments` these equal the running product of betas.
    """
    failures: list[tuple[int, int, Fraction]] = []
    for i in range(len(polys)):
        for j in range(i):
            pairing = moment_functional(polys[i] * polys[j], moments)
            if pairing != 0:
                failures.append((i, j, pairing))
    norms = tuple(moment_functional(p * p, moments) for p in polys)
    return OrthogonalityReport(passed=not failures, failures=tuple(failures), norms=norms)

"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; every tolerance is pinned in the assertions below.
"""

import math
import time
from fractions import Fraction

from scipy.integrate import quad

from monosemi import fock, moments, orthopoly, partitions, transforms
from monosemi.algebra import DensePolynomial

from reference_data import (
    MOMENT_POLYNOMIALS,
    MOMENT_ROWS,
    ORTHOGONAL_POLYS_M2,
    P2_DERIVED,
    P2_PRINTED,
)

F = Fraction


def _report(number: int, name: str, passed: bool) -> None:
    print(f"ACCEPTANCE {number:2d} ({name}): {'PASS' if passed else 'FAIL'}")
    assert passed, f"criterion {number} ({name}) failed"


def test_criterion_01_moment_golden_tables():
    start = time.perf_counter()
    table = moments.MomentTable()  # fresh, so the timing is honest
    ok = all(
        table.row(m, len(row) - 1) == row for m, row in sorted(MOMENT_ROWS.items())
    )
    elapsed = time.perf_counter() - start
    _report(1, "moment golden tables", ok and elapsed < 1.0)


def test_criterion_02_triangulation():
    start = time.perf_counter()
    enum_ok = all(
        partitions.count_nc2wmo(m, n) == moments.moment(m, n)
        for m in range(1, 5)
        for n in range(0, 7)
    )
    enum_elapsed = time.perf_counter() - start
    fock_ok = all(
        fock.moment_via_fock(m, n) == moments.moment(m, n)
        for m in range(1, 4)
        for n in range(0, 6)
    )
    _report(2, "triangulation", enum_ok and fock_ok and enum_elapsed < 60.0)


def test_criterion_03_polynomial_forms():
    ok = all(
        moments.moment_polynomial(n).poly == DensePolynomial(coeffs)
        for n, coeffs in sorted(MOMENT_POLYNOMIALS.items())
    )
    _report(3, "polynomial forms", ok)


def test_criterion_04_cumulants():
    low = moments.cumulant_comparison(1, 14)
    ok = all(c.equal for c in low)
    tail = moments.cumulant_comparison(16, 20)
    for c in tail:  # report-only window, no equality assertion
        marker = "match" if c.equal else "MISMATCH"
        print(f"    cumulant r_{c.k}: computed {c.computed} vs reference {c.reference} [{marker}]")
    ok = ok and len(tail) == 5
    _report(4, "cumulants", ok)


def test_criterion_05_density_m2_closed_form():
    center = transforms.density_m2_closed(0.0)
    ok = abs(center - (math.sqrt(20) - 2) / (4 * math.pi)) < 1e-12

    x = 2.0  # both branch formulas, evaluated side by side at the seam
    inner_branch = (
        math.sqrt(math.sqrt(100 - 16 * x * x) - x * x + 10) - math.sqrt(4 - x * x)
    ) / (4 * math.pi)
    outer_branch = math.sqrt(20 - 2 * x * x - 2 * x * math.sqrt(x * x - 4)) / (4 * math.pi)
    ok = ok and abs(inner_branch - outer_branch) < 1e-12
    ok = ok and abs(transforms.density_m2_closed(2.0) - inner_branch) < 1e-12
    ok = ok and abs(transforms.density_m2_closed(2.5)) < 1e-12
    ok = ok and abs(transforms.density_m2_closed(-2.5)) < 1e-12

    for k, expected in ((0, 1), (2, 2), (4, 7), (6, 29)):
        value, _ = quad(
            lambda t: t**k * transforms.density_m2_closed(t),
            -2.5, 2.5, points=[-2.0, 0.0, 2.0], limit=200,
        )
        ok = ok and abs(value - expected) / expected < 1e-5
    _report(5, "density m=2 closed form", ok)


def test_criterion_06_stieltjes_inversion_oracle():
    start = time.perf_counter()
    ok = True
    for i in range(50):
        x = -2.4 + 4.8 * i / 49  # 50 points inside (-5/2, 5/2)
        est = transforms.density_numeric(2, x)
        ok = ok and abs(est.value - transforms.density_m2_closed(x)) < 1e-6
    for i in range(50):
        x = -1.9 + 3.8 * i / 49
        est = transforms.density_numeric(1, x)
        ok = ok and abs(est.value - transforms.semicircle_density(x)) < 1e-6
    elapsed = time.perf_counter() - start
    _report(6, "stieltjes inversion oracle", ok and elapsed < 10.0)


def test_criterion_07_supports():
    start = time.perf_counter()
    ok = (
        transforms.support_endpoint(1) == 2
        and transforms.support_endpoint(2) == F(5, 2)
        and transforms.support_endpoint(3) == F(29, 10)
    )
    report = transforms.endpoint_bounds_check(10_000, exact_limit=16)
    ok = ok and report.passed
    ok = ok and report.gap_to_sqrt2 < 1e-2 * math.sqrt(2)
    elapsed = time.perf_counter() - start
    _report(7, "support endpoints", ok and elapsed < 5.0)


def test_criterion_08_transform_identities():
    identities = transforms.transform_identities_check(m_max=5, n_points=1000, seed=2026)
    series = transforms.m2_generating_identities_check(seed=2026)
    ok = (
        identities.max_quadratic_residual < 1e-10
        and identities.max_pairing_relative_error < 1e-9
        and series.series_ok
        and len(series.series_residual_coefficients) >= 12  # exact through z**22
    )
    _report(8, "transform identities", ok)


def test_criterion_09_operator_axioms():
    ok = True
    for m in range(1, 4):
        for depth in range(3, 7):
            checks = fock.check_operator_identities(m, depth)
            ok = ok and all(c.passed for c in checks)
    independence = fock.check_monotone_independence(m=3, depth=8, trials=200, seed=2026)
    ok = ok and independence.passed
    _report(9, "operator axioms", ok)


def test_criterion_10_orthogonal_polynomials():
    mus = moments.symmetric_moments(2, 10)
    jc = orthopoly.jacobi_from_moments(mus, 10)
    polys = orthopoly.monic_orthogonal_polys(jc, 10)
    ok = all(
        polys[n] == DensePolynomial(coeffs) for n, coeffs in sorted(ORTHOGONAL_POLYS_M2.items())
    )
    derived, printed = DensePolynomial(P2_DERIVED), DensePolynomial(P2_PRINTED)
    print(
        f"    p_2 discrepancy: derived {list(derived.coeffs)} (x^2 - 2) "
        f"vs printed {list(printed.coeffs)} (x^2 - x)"
    )
    ok = ok and polys[2] == derived and polys[2] != printed
    for m in range(1, 7):
        jc_m = orthopoly.jacobi_from_moments(moments.symmetric_moments(m, 8), 8)
        ok = ok and all(b > 0 for b in jc_m.beta)
    _report(10, "orthogonal polynomials", ok)

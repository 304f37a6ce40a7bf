"""Command-line front end: computation subcommands plus verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Identical
arguments (and seed) produce byte-identical output.  The enumeration bound
for non-crossing pairings can be overridden with MONOSEMI_ENUM_BOUND.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import fock, moments, orthopoly, partitions, transforms
from .algebra import rational_to_str

ENUM_BOUND_ENV = "MONOSEMI_ENUM_BOUND"


def _enum_bound(args) -> int:
    if getattr(args, "bound", None) is not None:
        return args.bound
    return int(os.environ.get(ENUM_BOUND_ENV, partitions.DEFAULT_ENUM_BOUND))


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv_rows(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# computation subcommands
# ---------------------------------------------------------------------------


def cmd_moments(args) -> int:
    values = moments.moments_general(args.m, args.n)
    polys = (
        {n: moments.moment_polynomial(n).poly for n in range(args.n + 1)}
        if args.poly
        else None
    )
    cumulants = moments.monotone_cumulants(args.cumulants) if args.cumulants else None

    if args.format == "json":
        payload = {
            "m": args.m,
            "n_max": args.n,
            "moments": [rational_to_str(v) for v in values],
        }
        if polys is not None:
            payload["polynomials"] = {
                str(n): [rational_to_str(c) for c in poly.coeffs] for n, poly in polys.items()
            }
        if cumulants is not None:
            payload["cumulants"] = {
                str(k): rational_to_str(cumulants[k]) for k in range(1, len(cumulants) + 1)
            }
        _emit(_json(payload), args.output)
    else:
        if polys is not None:
            header = ["n", "moment", "poly_coeffs"]
            rows = [
                [n, values[n], " ".join(rational_to_str(c) for c in polys[n].coeffs)]
                for n in range(args.n + 1)
            ]
        else:
            header = ["n", "moment"]
            rows = [[n, values[n]] for n in range(args.n + 1)]
        text = _csv_rows(header, rows)
        if cumulants is not None:
            text += "\n" + _csv_rows(
                ["k", "cumulant"],
                [[k, rational_to_str(cumulants[k])] for k in range(1, len(cumulants) + 1)],
            )
        _emit(text, args.output)
    return 0


def cmd_cumulants(args) -> int:
    comparison = moments.cumulant_comparison(1, min(args.k_max, 20))
    computed = moments.monotone_cumulants(args.k_max)
    if args.format == "json":
        payload = {
            "k_max": args.k_max,
            "cumulants": {
                str(k): rational_to_str(computed[k]) for k in range(1, args.k_max + 1)
            },
            "reference_comparison": [
                {
                    "k": c.k,
                    "computed": rational_to_str(c.computed),
                    "reference": rational_to_str(c.reference),
                    "equal": c.equal,
                }
                for c in comparison
            ],
        }
        _emit(_json(payload), args.output)
    else:
        ref = {c.k: c for c in comparison}
        rows = []
        for k in range(1, args.k_max + 1):
            if k in ref:
                rows.append(
                    [k, rational_to_str(computed[k]), rational_to_str(ref[k].reference),
                     ref[k].equal]
                )
            else:
                rows.append([k, rational_to_str(computed[k]), "", ""])
        _emit(_csv_rows(["k", "computed", "reference", "equal"], rows), args.output)
    return 0


def cmd_poly(args) -> int:
    result = moments.moment_polynomial(args.n)
    coeffs = [rational_to_str(c) for c in result.poly.coeffs]
    if args.format == "json":
        _emit(_json({"n": args.n, "degree": result.poly.degree, "coefficients": coeffs}),
              args.output)
    else:
        _emit(_csv_rows(["degree", "coefficient"], list(enumerate(coeffs))), args.output)
    return 0


def cmd_density(args) -> int:
    curve = transforms.density_curve(args.m, args.x_min, args.x_max, args.samples)
    if args.format == "svg":
        _emit(_svg_curve(curve), args.output)
        return 0
    if args.format == "json":
        payload = {
            "m": args.m,
            "samples": [
                {"x": x, "density": v, "residual": r}
                for x, v, r in zip(curve.xs, curve.values, curve.residuals)
            ],
        }
        _emit(_json(payload), args.output)
    else:
        rows = [[x, v, r] for x, v, r in zip(curve.xs, curve.values, curve.residuals)]
        _emit(_csv_rows(["x", "density", "residual"], rows), args.output)
    return 0


def cmd_support(args) -> int:
    exact_limit = min(args.m_max, args.exact_limit)
    rows = []
    exact_values: list[Fraction] = []
    a = Fraction(2)
    for m in range(1, exact_limit + 1):
        if m > 1:
            a = a + 1 / a
        exact_values.append(a)
    floats = [float(v) for v in exact_values]
    while len(floats) < args.m_max:
        floats.append(floats[-1] + 1.0 / floats[-1])

    all_ok = True
    for m in range(1, args.m_max + 1):
        exact = rational_to_str(exact_values[m - 1]) if m <= exact_limit else None
        if m >= 3:
            if m <= exact_limit:
                lower, upper = transforms.endpoint_bound_flags(exact_values[m - 1], m)
            else:
                af = floats[m - 1]
                lower = af >= math.sqrt(m + math.sqrt(m * (m + 1.0)))
                upper = af <= math.sqrt(2.0 * m + math.sqrt(2.0 * m))
        else:
            lower = upper = None
        if m >= 2:
            if m <= exact_limit:
                ratio_ok = (m - 1) * exact_values[m - 1] ** 2 <= m * exact_values[m - 2] ** 2
            else:
                ratio_ok = floats[m - 1] / floats[m - 2] <= math.sqrt(m / (m - 1.0))
        else:
            ratio_ok = None
        for flag in (lower, upper, ratio_ok):
            if flag is False:
                all_ok = False
        rows.append(
            {
                "m": m,
                "exact": exact,
                "float": floats[m - 1],
                "lower_bound_ok": lower,
                "upper_bound_ok": upper,
                "ratio_bound_ok": ratio_ok,
            }
        )

    if args.format == "json":
        payload = {
            "m_max": args.m_max,
            "exact_limit": exact_limit,
            "float_tol": 1e-12,
            "endpoints": rows,
            "bounds_passed": all_ok,
            "ratio_to_sqrt_m": floats[-1] / math.sqrt(args.m_max),
        }
        _emit(_json(payload), args.output)
    else:
        csv_rows = [
            [r["m"], r["exact"] if r["exact"] is not None else "",
             r["float"], r["lower_bound_ok"], r["upper_bound_ok"], r["ratio_bound_ok"]]
            for r in rows
        ]
        _emit(
            _csv_rows(["m", "exact", "float", "lower_ok", "upper_ok", "ratio_ok"], csv_rows),
            args.output,
        )
    return 0


def cmd_orthopoly(args) -> int:
    mus = moments.symmetric_moments(args.m, args.order)
    jc = orthopoly.jacobi_from_moments(mus, args.order)
    polys = orthopoly.monic_orthogonal_polys(jc, args.order)
    payload = {
        "m": args.m,
        "order": args.order,
        "alpha": [rational_to_str(a) for a in jc.alpha],
        "beta": [rational_to_str(b) for b in jc.beta],
        "polynomials": [[rational_to_str(c) for c in p.coeffs] for p in polys],
    }
    _emit(_json(payload), args.output)
    return 0


def _svg_curve(curve: transforms.DensityCurve) -> str:
    width, height, margin = 640, 400, 48
    xs, ys = curve.xs, curve.values
    x_lo, x_hi = min(xs), max(xs)
    y_hi = max(max(ys), 1e-9) * 1.08
    span_x = x_hi - x_lo or 1.0

    def px(x: float) -> float:
        return margin + (x - x_lo) / span_x * (width - 2 * margin)

    def py(y: float) -> float:
        return height - margin - y / y_hi * (height - 2 * margin)

    pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
    axis_y = py(0.0)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{axis_y:.2f}" x2="{width - margin}" y2="{axis_y:.2f}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{px(0.0):.2f}" y1="{margin}" x2="{px(0.0):.2f}" y2="{height - margin}" '
        'stroke="black" stroke-width="1"/>',
        f'<polyline points="{pts}" fill="none" stroke="#1f6feb" stroke-width="2"/>',
        f'<text x="{width - margin}" y="{axis_y - 6:.2f}" text-anchor="end" '
        f'font-family="monospace" font-size="12">x in [{x_lo:.6g}, {x_hi:.6g}]</text>',
        f'<text x="{margin + 4}" y="{margin - 8}" font-family="monospace" font-size="12">'
        f"density of the {curve.m}-fold power</text>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def cmd_plot(args) -> int:
    a_m = transforms.support_endpoints_float(args.m)[-1]
    pad = 0.15
    curve = transforms.density_curve(args.m, -a_m - pad, a_m + pad, args.samples)
    output = args.output or f"density_m{args.m}.svg"
    _emit(_svg_curve(curve), output)
    return 0


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _verify_partitions(seed: int, bound: int, n_max: int = 6, m_max: int = 4) -> dict:
    checks = []
    passed = True
    for n in range(0, min(n_max, bound) + 1):
        enum_counts = {
            m: partitions.count_nc2wmo(m, n, bound=bound) for m in range(1, m_max + 1)
        }
        for m in range(1, m_max + 1):
            rec = moments.moment(m, n)
            equal = enum_counts[m] == rec
            passed = passed and equal
            checks.append(
                {
                    "n": n,
                    "m": m,
                    "enumerated_count": str(enum_counts[m]),
                    "recurrence_count": str(rec),
                    "equal": equal,
                }
            )
    return {"seed": seed, "bound": bound, "checks": checks, "passed": passed}


def _verify_fock(seed: int, trials: int) -> dict:
    identities = fock.check_operator_identities(m=3, depth=5)
    triangulation = []
    tri_ok = True
    for m in range(1, 4):
        for n in range(0, 6):
            via_fock = fock.moment_via_fock(m, n)
            rec = moments.moment(m, n)
            equal = via_fock == rec
            tri_ok = tri_ok and equal
            triangulation.append(
                {"m": m, "n": n, "fock": str(via_fock), "recurrence": str(rec), "equal": equal}
            )
    independence = fock.check_monotone_independence(m=3, depth=8, trials=trials, seed=seed)
    passed = all(c.passed for c in identities) and tri_ok and independence.passed
    return {
        "seed": seed,
        "identities": [
            {"identity": c.identity, "status": c.status, **({"witness": c.witness} if c.witness else {})}
            for c in identities
        ],
        "triangulation": triangulation,
        "independence": {
            "trials": independence.trials,
            "middle_factorization_checks": independence.middle_factorization_checks,
            "product_split_checks": independence.product_split_checks,
            "boundary_product_checks": independence.boundary_product_checks,
            "failures": independence.failures,
            "passed": independence.passed,
        },
        "passed": passed,
    }


def _verify_transforms(seed: int) -> dict:
    identities = transforms.transform_identities_check(m_max=5, n_points=200, seed=seed)
    series = transforms.m2_generating_identities_check(seed=seed, n_points=100)

    max_err_m2 = 0.0
    for i in range(21):
        x = -2.4 + 4.8 * i / 20
        est = transforms.density_numeric(2, x)
        max_err_m2 = max(max_err_m2, abs(est.value - transforms.density_m2_closed(x)))
    max_err_m1 = 0.0
    for i in range(21):
        x = -1.9 + 3.8 * i / 20
        est = transforms.density_numeric(1, x)
        max_err_m1 = max(max_err_m1, abs(est.value - transforms.semicircle_density(x)))
    oracle_passed = max_err_m2 < 1e-6 and max_err_m1 < 1e-6

    endpoints = transforms.endpoint_bounds_check(1000)
    passed = identities.passed and series.passed and oracle_passed and endpoints.passed
    return {
        "seed": seed,
        "identities": {
            "points": identities.points,
            "m_max": identities.m_max,
            "max_quadratic_residual": identities.max_quadratic_residual,
            "quadratic_tol": identities.quadratic_tol,
            "max_pairing_relative_error": identities.max_pairing_relative_error,
            "pairing_tol": identities.pairing_tol,
            "branch_violations": identities.branch_violations,
            "passed": identities.passed,
        },
        "series": {
            "truncation_order": series.truncation_order,
            "series_ok": series.series_ok,
            "pointwise_max_error": series.pointwise_max_error,
            "pointwise_tol": series.pointwise_tol,
            "sign_rule_ok": series.sign_rule_ok,
            "passed": series.passed,
        },
        "density_oracle": {
            "max_error_m2": max_err_m2,
            "max_error_m1": max_err_m1,
            "tol": 1e-6,
            "passed": oracle_passed,
        },
        "endpoints": {
            "m_max": endpoints.m_max,
            "gap_to_sqrt2": endpoints.gap_to_sqrt2,
            "passed": endpoints.passed,
        },
        "passed": passed,
    }


def _verify_orthopoly() -> dict:
    sections = {}
    passed = True

    # semicircle recurrence coefficients are identically 1
    catalan_moments = [
        Fraction(partitions.catalan(k // 2)) if k % 2 == 0 else Fraction(0) for k in range(17)
    ]
    jc = orthopoly.jacobi_from_moments(catalan_moments, 8)
    semicircle_ok = all(b == 1 for b in jc.beta)
    sections["semicircle_beta_all_one"] = semicircle_ok
    passed = passed and semicircle_ok

    # positivity and exact orthogonality for the first few powers
    beta_positive = True
    orthogonality_ok = True
    for m in range(1, 7):
        mus = moments.symmetric_moments(m, 8)
        jc_m = orthopoly.jacobi_from_moments(mus, 8)
        beta_positive = beta_positive and all(b > 0 for b in jc_m.beta)
        polys = orthopoly.monic_orthogonal_polys(jc_m, 8)
        report = orthopoly.verify_orthogonality(polys, mus)
        orthogonality_ok = orthogonality_ok and report.passed
    sections["beta_positive_m_le_6"] = beta_positive
    sections["orthogonality_exact_m_le_6"] = orthogonality_ok
    passed = passed and beta_positive and orthogonality_ok

    return {**sections, "passed": passed}


def _verify_moments() -> dict:
    m2_match = moments.moments_m2(12) == moments.moments_general(2, 12)
    poly_ok = True
    try:
        for n in range(0, 8):
            moments.moment_polynomial(n)
    except moments.MomentPolynomialError:
        poly_ok = False
    hankel_ok = all(moments.hankel_positive(m, 5) for m in range(1, 7))
    cumulants = moments.monotone_cumulants(14)
    cumulant_ok = cumulants[2] == 1 and all(cumulants[k] == 0 for k in range(1, 14, 2))
    passed = m2_match and poly_ok and hankel_ok and cumulant_ok
    return {
        "m2_recurrences_agree": m2_match,
        "polynomials_consistent": poly_ok,
        "hankel_positive_m_le_6": hankel_ok,
        "cumulant_sanity": cumulant_ok,
        "passed": passed,
    }


def cmd_verify(args) -> int:
    seed = args.seed
    bound = _enum_bound(args)
    if args.suite == "partitions":
        report = _verify_partitions(seed, bound)
    elif args.suite == "fock":
        report = _verify_fock(seed, args.trials)
    elif args.suite == "transforms":
        report = _verify_transforms(seed)
    else:
        sections = {
            "partitions": _verify_partitions(seed, bound),
            "fock": _verify_fock(seed, args.trials),
            "transforms": _verify_transforms(seed),
            "orthopoly": _verify_orthopoly(),
            "moments": _verify_moments(),
        }
        report = {
            "seed": seed,
            "sections": sections,
            "passed": all(s["passed"] for s in sections.values()),
        }
    _emit(_json(report), args.output)
    return 0 if report["passed"] else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monosemi",
        description="Monotone convolution powers of the semicircle law: "
        "moments, cumulants, densities, supports, orthogonal polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="exact moment sequence of the m-fold power")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="largest moment index")
    p.add_argument("--poly", action="store_true", help="include polynomial-in-m forms")
    p.add_argument("--cumulants", type=int, metavar="K", help="include cumulants r_1..r_K")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("cumulants", help="monotone cumulants with reference comparison")
    p.add_argument("--k-max", type=int, default=20)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cumulants)

    p = sub.add_parser("poly", help="moment as an exact polynomial in the power m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("density", help="numerically inverted density on a grid")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x-min", type=float, default=-3.0)
    p.add_argument("--x-max", type=float, default=3.0)
    p.add_argument("--samples", type=int, default=121)
    p.add_argument("--format", choices=["csv", "json", "svg"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("support", help="exact support endpoints and growth bounds")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--exact-limit", type=int, default=transforms.EXACT_ENDPOINT_LIMIT)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("orthopoly", help="recurrence coefficients and monic polynomials")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_orthopoly)

    p = sub.add_parser("verify", help="cross-route verification suites")
    p.add_argument("suite", choices=["partitions", "fock", "transforms", "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--bound", type=int, help=f"enumeration bound (or ${ENUM_BOUND_ENV})")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="write an SVG of the density curve")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--samples", type=int, default=241)
    p.add_argument("-o", "--output", help="default density_m<M>.svg")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Commands: build | error | bounds | compose | contour | selftest.
All structured output goes through a deterministic serializer: fixed key
order, floats at 17 significant digits (infinite factor parameters become
the string "inf", which strict JSON cannot carry as a number), LF line
endings.  Exit codes: 0 ok, 2 usage, 3 numeric domain, 4 equioscillation
deficiency, 5 composition residual breach.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__, analysis, approximants, composition, selftest
from .elliptic import solve_lambda
from .errors import DomainError, ResolutionError

THETA_FLAG_MIN = 1e-8
THETA_FLAG_MAX = 0.5 * math.pi - 1e-8
COMPOSE_TOLERANCE = 1e-9


def _fmt(value) -> str:
    """Serialize to deterministic JSON text."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        x = float(value)
        if math.isnan(x):
            return '"nan"'
        if math.isinf(x):
            return '"inf"' if x > 0 else '"-inf"'
        if x == 0.0:
            x = 0.0  # normalize -0.0
        return format(x, ".17g")
    if isinstance(value, complex):
        return _fmt([value.real, value.imag])
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, dict):
        inner = ", ".join(f"{_fmt(str(k))}: {_fmt(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _envelope(command: str, inputs: dict, results: dict) -> str:
    return _fmt(
        {
            "command": command,
            "inputs": inputs,
            "results": results,
            "tool_version": __version__,
        }
    )


def _check_theta_flag(theta: float) -> None:
    if not (THETA_FLAG_MIN < theta < THETA_FLAG_MAX):
        raise _UsageError(f"--theta must lie in ({THETA_FLAG_MIN}, pi/2 - 1e-8), got {theta!r}")


class _UsageError(Exception):
    pass


def _rational_payload(r: approximants.UnimodularRational) -> dict:
    return {
        "z_power": r.z_power,
        "quarter_turns": r.quarter_turns,
        "factors": [f.value for f in r.factors],
        "zeros": [[w.real, w.imag] for w in r.zeros()],
        "poles": [[w.real, w.imag] for w in r.poles()],
        "exact_type": list(r.exact_type()),
    }


def _cmd_build(args) -> int:
    if args.problem in ("z5", "z6"):
        if args.theta is None:
            raise _UsageError(f"--theta is required for {args.problem}")
        _check_theta_flag(args.theta)
        theta = args.theta
        ell, ell_comp = math.cos(theta), math.sin(theta)
        if args.problem == "z5":
            r = approximants.build_r(args.degree, theta)
            red = solve_lambda(ell, 2 * args.degree + 1, ell_comp)
        else:
            r = approximants.build_s(args.degree, theta)
            red = solve_lambda(ell, args.degree, ell_comp)
        results = {
            "problem": args.problem,
            "degree": args.degree,
            "theta": theta,
            "ell": ell,
            "lambda": red.lam,
            "lambda_comp": red.lam_comp,
            "predicted_max_error": math.asin(min(1.0, red.lam_comp)),
        }
        results.update(_rational_payload(r))
    else:  # z4 takes --ell
        if args.ell is None:
            raise _UsageError("--ell is required for z4")
        if args.degree < 1:
            raise _UsageError("z4 needs --degree >= 1")
        approx = approximants.z4_solution(args.degree, args.ell)
        zf = approx.fraction
        red = zf.reduction
        m = args.degree
        results = {
            "problem": "z4",
            "degree": m,
            "ell": args.ell,
            "lambda": red.lam,
            "lambda_comp": red.lam_comp,
            "predicted_max_error": approx.deviation,
            "scale": approx.scale,
            "z_power": 1,
            "quarter_turns": 0,
            # per-factor constants of the product form (1 + (x/ell)^2 c):
            # odd nodes carry the pole factors, even nodes the zero factors,
            # so the zeros/poles sit at +-i ell/sqrt(c)
            "factors": list(zf.cot2_odd),
            "zeros": [[0.0, s * args.ell / math.sqrt(c)] for c in zf.cot2_even for s in (1.0, -1.0)],
            "poles": [[0.0, s * args.ell / math.sqrt(c)] for c in zf.cot2_odd for s in (1.0, -1.0)],
            "exact_type": [2 * ((m - 1) // 2) + 1, 2 * (m // 2)],
        }
    inputs = {
        "problem": args.problem,
        "degree": args.degree,
        "theta": args.theta,
        "ell": args.ell,
        "format": args.format,
    }
    print(_envelope("build", inputs, results))
    return 0


def _cmd_error(args) -> int:
    _check_theta_flag(args.theta)
    if args.grid < 64:
        raise _UsageError(f"--grid must be at least 64, got {args.grid!r}")
    if args.problem == "z5":
        r = approximants.build_r(args.degree, args.theta)
        expected = 2 * args.degree + 2
        report = analysis.phase_error_sqrt(r, args.theta, args.grid)
    else:
        r = approximants.build_s(args.degree, args.theta)
        expected = args.degree + 1
        report = analysis.phase_error_sign(r, args.theta, args.grid)
    results = {
        "problem": args.problem,
        "degree": args.degree,
        "theta": args.theta,
        "measured_max_error": report.max_error,
        "predicted_max_error": report.predicted,
        "alternation_counts": list(report.arcs),
        "expected_per_arc": expected,
        "grid_size": report.grid_size,
        "extrema": [[t, e] for t, e in report.extrema],
    }
    inputs = {"problem": args.problem, "degree": args.degree, "theta": args.theta, "grid": args.grid}
    print(_envelope("error", inputs, results))
    if any(c < expected for c in report.arcs):
        return 4
    return 0


def _cmd_bounds(args) -> int:
    _check_theta_flag(args.theta)
    if not 0 <= args.max_degree <= 64:
        raise _UsageError(f"--max-degree must lie in [0, 64], got {args.max_degree!r}")
    rows = []
    for degree in range(args.max_degree + 1):
        if args.problem == "z5":
            r = approximants.build_r(degree, args.theta)
        else:
            r = approximants.build_s(degree, args.theta)
        grid_n = max(128, 8 * (degree + 1))
        measured = analysis.max_phase_error(r, args.theta, args.problem, grid_n)
        b_rho, b_sec = analysis.error_bounds(degree, args.theta, args.problem)
        rows.append((degree, measured, b_rho, b_sec))
    inputs = {
        "problem": args.problem,
        "max_degree": args.max_degree,
        "theta": args.theta,
        "format": args.format,
    }
    if args.format == "csv":
        lines = ["degree,measured,bound_rho,bound_secant"]
        for degree, measured, b_rho, b_sec in rows:
            lines.append(
                f"{degree},{format(measured, '.17g')},{format(b_rho, '.17g')},{format(b_sec, '.17g')}"
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        results = {
            "rows": [
                {"degree": d, "measured": m, "bound_rho": b1, "bound_secant": b2}
                for d, m, b1, b2 in rows
            ]
        }
        print(_envelope("bounds", inputs, results))
    return 0


def _compose_samples(count: int) -> np.ndarray:
    """Deterministic circle samples: Chebyshev-spaced plus 64 seeded points."""
    k = np.arange(count)
    cheb = math.pi * (2.0 * k + 1.0) / (2.0 * count)
    rng = np.random.default_rng(0x5EED)
    extra = 2.0 * math.pi * rng.random(64)
    return np.exp(1j * np.concatenate([cheb, extra]))


def _cmd_compose(args) -> int:
    _check_theta_flag(args.theta)
    if args.degree < 1 or args.degree_tilde < 1:
        raise _UsageError("compose needs positive --degree and --degree-tilde")
    if args.samples < 1:
        raise _UsageError("--samples must be positive")
    z = _compose_samples(args.samples)
    left, right = composition.compose_s(args.degree_tilde, args.degree, args.theta, z)
    residual = float(np.max(np.abs(left - right)))
    plan = composition.composition_plan(args.degree_tilde, args.degree, args.theta)
    inputs = {
        "degree": args.degree,
        "degree_tilde": args.degree_tilde,
        "theta": args.theta,
        "samples": args.samples,
    }
    results = {
        "theta_tilde": plan.theta_tilde,
        "target_degree": plan.target_degree,
        "max_residual": residual,
        "tolerance": COMPOSE_TOLERANCE,
        "passed": residual <= COMPOSE_TOLERANCE,
    }
    print(_envelope("compose", inputs, results))
    return 0 if residual <= COMPOSE_TOLERANCE else 5


def _cmd_contour(args) -> int:
    _check_theta_flag(args.theta)
    try:
        parts = [float(v) for v in args.window.split(",")]
    except ValueError:
        raise _UsageError(f"--window must be four comma-separated reals, got {args.window!r}")
    if len(parts) != 4:
        raise _UsageError(f"--window must be four comma-separated reals, got {args.window!r}")
    window = (parts[0], parts[1], parts[2], parts[3])
    if args.problem == "z5":
        r = approximants.build_r(args.degree, args.theta)
        target = "sqrt"
    else:
        r = approximants.build_s(args.degree, args.theta)
        target = "sign"
    grid = analysis.contour_grid(r, target, window, args.resolution)
    res = np.linspace(window[0], window[1], args.resolution)
    ims = np.linspace(window[2], window[3], args.resolution)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("re,im,value\n")
            for i in range(args.resolution):
                for j in range(args.resolution):
                    fh.write(
                        f"{format(res[j], '.17g')},{format(ims[i], '.17g')},"
                        f"{format(grid.values[i, j], '.17g')}\n"
                    )
    except OSError as exc:
        print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_selftest(_args) -> int:
    results = selftest.run_all()
    failures = 0
    for index, name, ok, detail in results:
        tag = "PASS" if ok else "FAIL"
        print(f"{tag} criterion-{index} {name}: {detail}")
        failures += 0 if ok else 1
    if failures:
        print(f"{failures} criterion(s) failed")
        return 1
    print("all criteria passed")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zolocirc",
        description="Optimal unimodular rational approximants of sqrt(z) and sign(z) on circle arcs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct an approximant and print its JSON description")
    p.add_argument("--problem", required=True, choices=("z4", "z5", "z6"))
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--theta", type=float)
    p.add_argument("--ell", type=float)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("error", help="measure the equioscillating phase error")
    p.add_argument("--problem", required=True, choices=("z5", "z6"))
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--theta", required=True, type=float)
    p.add_argument("--grid", type=int, default=512)
    p.set_defaults(func=_cmd_error)

    p = sub.add_parser("bounds", help="tabulate measured errors against the decay bounds")
    p.add_argument("--problem", required=True, choices=("z5", "z6"))
    p.add_argument("--max-degree", required=True, type=int)
    p.add_argument("--theta", required=True, type=float)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("compose", help="verify the sign-approximant composition law")
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--degree-tilde", required=True, type=int)
    p.add_argument("--theta", required=True, type=float)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("contour", help="emit |approximant - target| on a grid as CSV")
    p.add_argument("--problem", required=True, choices=("z5", "z6"))
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--theta", required=True, type=float)
    p.add_argument("--window", default="-2,2,-2,2")
    p.add_argument("--resolution", type=int, default=256)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_contour)

    p = sub.add_parser("selftest", help="run the acceptance sweep (criteria 1-8)")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"numeric domain error: {exc}", file=sys.stderr)
        return 3
    except ResolutionError as exc:
        print(f"equioscillation deficiency: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())

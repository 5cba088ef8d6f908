"""Command-line front end: batch verification, series dumps, pairing traces.

Configuration precedence: flags override PIE_* environment variables, which
override built-in defaults.  Exit codes: 0 all checks pass, 1 any failure or
internal fault, 2 usage error.  Output is byte-stable for a fixed
configuration; wall-clock timings are emitted only under --timings.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import replace
from fractions import Fraction

from .errors import AlgorithmFault
from .exact import C
from .identities import CheckConfig, IdentityId, check_identity, run_all
from .involution import class_members, class_sum, pair, trace_lines, verify_pairing_class
from .series import (
    coefficient_rows,
    series_A,
    series_K,
    series_M,
    series_dilcher_binomial,
    series_entry4,
)

MAX_N = 200


def _env(name: str, default: str | None = None) -> str | None:
    return os.environ.get(f"PIE_{name}", default)


def _parse_complex(text: str) -> complex:
    return complex(text.strip().replace(" ", "").replace("i", "j"))


def _parse_complex_list(text: str) -> tuple[complex, ...]:
    return tuple(_parse_complex(tok) for tok in text.split(",") if tok.strip())


def _parse_c_value(text: str):
    if text.strip().lower() == "symbolic":
        return C
    return Fraction(text.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pie",
        description="verify weighted partition identities with exact arithmetic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity checks")
    group = verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--id", dest="ident", help="identity tag to check")
    group.add_argument("--all", action="store_true", help="check every identity")
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--q-order", type=int, default=None)
    verify.add_argument("--m-max", type=int, default=None)
    verify.add_argument("--mode", choices=("exact", "numeric"), default=None)
    verify.add_argument("--z", default=None, help="comma-separated complex grid")
    verify.add_argument("--c", default=None, help="comma-separated complex grid")
    verify.add_argument("--tol", type=float, default=None)
    verify.add_argument("--format", choices=("json", "csv", "text"), default=None)
    verify.add_argument("--output", default=None)
    verify.add_argument("--timings", action="store_true")

    series = sub.add_parser("series", help="dump series coefficients as CSV")
    series.add_argument(
        "--name", required=True, choices=("entry4", "M", "K", "A", "dilcher")
    )
    series.add_argument("--order", type=int, default=None)
    series.add_argument("--m", type=int, default=1)
    series.add_argument("--c", default="symbolic", help="rational value or 'symbolic'")
    series.add_argument("--output", default=None)

    inv = sub.add_parser("involution", help="trace or sweep the pairing")
    inv.add_argument("--n", type=int, required=True)
    inv.add_argument("--N-divisor", dest="modulus", type=int, required=True)
    inv.add_argument("--trace", action="store_true")
    inv.add_argument("--sweep", action="store_true", help="sweep every N up to n")
    inv.add_argument("--output", default=None)

    rep = sub.add_parser("report-all", help="full manifest of every check")
    rep.add_argument("--n-max", type=int, default=None)
    rep.add_argument("--q-order", type=int, default=None)
    rep.add_argument("--format", choices=("json", "csv", "text"), default=None)
    rep.add_argument("--output", default=None)
    rep.add_argument("--timings", action="store_true")

    return parser


def _config_from(args: argparse.Namespace) -> CheckConfig:
    cfg = CheckConfig()
    env_int = lambda name: int(_env(name)) if _env(name) else None
    n_max = getattr(args, "n_max", None) or env_int("N_MAX") or cfg.n_max
    if not 1 <= n_max <= MAX_N:
        raise ValueError(f"n-max must lie in 1..{MAX_N}")
    q_order = getattr(args, "q_order", None) or env_int("Q_ORDER") or cfg.q_order
    m_max = getattr(args, "m_max", None) or env_int("M_MAX") or cfg.m_max
    mode = getattr(args, "mode", None) or _env("MODE") or cfg.mode
    tol_env = _env("TOLERANCE")
    tol = getattr(args, "tol", None) or (float(tol_env) if tol_env else cfg.tolerance)
    z_text = getattr(args, "z", None) or _env("Z")
    c_text = getattr(args, "c", None) or _env("C")
    cfg = replace(
        cfg,
        n_max=n_max,
        q_order=q_order,
        m_max=m_max,
        mode=mode,
        tolerance=tol,
    )
    if z_text:
        cfg = replace(cfg, z_grid=_parse_complex_list(z_text))
    if c_text:
        cfg = replace(cfg, c_grid=_parse_complex_list(c_text))
    return cfg


def _open_sink(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def emit_report(reports, fmt: str, sink, timings: bool = False) -> None:
    """Serialize reports bit-stably: sorted keys, fixed order, LF endings."""
    dicts = [r.to_json_dict(include_timing=timings) for r in reports]
    if fmt == "json":
        sink.write(json.dumps(dicts, sort_keys=True, indent=2))
        sink.write("\n")
    elif fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(["id", "mode", "status", "elapsed_ms", "first_failure"])
        for d in dicts:
            writer.writerow(
                [
                    d["id"],
                    d["mode"],
                    d["status"],
                    "" if d["elapsed_ms"] is None else d["elapsed_ms"],
                    "" if d["first_failure"] is None else json.dumps(
                        d["first_failure"], sort_keys=True
                    ),
                ]
            )
    else:
        for d in dicts:
            mark = "PASS" if d["status"] == "pass" else "FAIL"
            extra = ""
            if d["first_failure"] is not None:
                extra = " " + json.dumps(d["first_failure"], sort_keys=True)
            sink.write(f"{mark} {d['id']} [{d['mode']}]{extra}\n")


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    if args.all:
        if cfg.mode == "numeric":
            from .identities import NUMERIC_CAPABLE

            idents = [i for i in IdentityId if i in NUMERIC_CAPABLE]
        else:
            idents = list(IdentityId)
    else:
        idents = [args.ident]
    reports = [check_identity(i, cfg) for i in idents]
    fmt = args.format or _env("FORMAT") or "json"
    sink, close = _open_sink(args.output or _env("OUTPUT"))
    try:
        emit_report(reports, fmt, sink, timings=args.timings)
    finally:
        if close:
            sink.close()
    return 0 if all(r.passed for r in reports) else 1


def _cmd_series(args: argparse.Namespace) -> int:
    order = args.order or int(_env("Q_ORDER") or 0) or 30
    if order < 1:
        raise ValueError("order must be positive")
    c = _parse_c_value(args.c)
    name = args.name
    if name == "A":
        result = series_A(c, order)
    elif name == "M":
        result = series_M(args.m, c, order)
    elif name == "K":
        result = series_K(args.m, c, order)
    elif name == "entry4":
        result = series_entry4(c, order)[0]
    else:
        result = series_dilcher_binomial(args.m, order)[0]
    sink, close = _open_sink(args.output or _env("OUTPUT"))
    try:
        writer = csv.writer(sink, lineterminator="\n")
        for power, coeff in coefficient_rows(result):
            writer.writerow([power, coeff])
    finally:
        if close:
            sink.close()
    return 0


def _cmd_involution(args: argparse.Namespace) -> int:
    n, N = args.n, args.modulus
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}")
    if not 1 <= N <= n:
        raise ValueError("need 1 <= N-divisor <= n")
    sink, close = _open_sink(args.output or _env("OUTPUT"))
    try:
        if args.sweep:
            for modulus in range(1, n + 1):
                counts = verify_pairing_class(n, modulus)
                total = class_sum(n, modulus)
                expected = 1 if n % modulus == 0 else 0
                if total != expected:
                    raise AlgorithmFault(
                        f"class sum {total} != {expected} at n={n}, N={modulus}"
                    )
                sink.write(
                    f"N={modulus} members={counts['members']} "
                    f"fixed={counts['fixed']} class_sum={total}\n"
                )
            sink.write(f"sweep ok for n={n}\n")
            return 0
        verify_pairing_class(n, N)
        for p in class_members(n, N):
            trace = pair(p, N)
            if args.trace:
                for line in trace_lines(trace):
                    sink.write(line + "\n")
            else:
                target = "fixed" if trace.is_fixed else str(trace.output)
                sink.write(f"{p} -> {target} ({trace.case})\n")
        sink.write(f"class_sum={class_sum(n, N)}\n")
        return 0
    finally:
        if close:
            sink.close()


def _cmd_report_all(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    reports = run_all(cfg)
    fmt = args.format or _env("FORMAT") or "json"
    sink, close = _open_sink(args.output or _env("OUTPUT"))
    try:
        emit_report(reports, fmt, sink, timings=args.timings)
    finally:
        if close:
            sink.close()
    return 0 if all(r.passed for r in reports) else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "series":
            return _cmd_series(args)
        if args.command == "involution":
            return _cmd_involution(args)
        return _cmd_report_all(args)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except AlgorithmFault as exc:
        print(f"algorithm fault: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

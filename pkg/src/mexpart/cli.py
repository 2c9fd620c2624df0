"""Command-line surface: every computation and verification as a
reproducible, scriptable run with text, CSV (RFC 4180) or JSON output, and
optional rendered figures next to the delimited output.

Exit codes: 0 success, 1 usage error, 2 hypothesis violation, 3 verification
failure, 4 I/O error.  Identical invocations produce byte-identical output
files; no timestamps, no randomness.

The only environment variable honored is MEXPART_OUTPUT_DIR, which rebases
relative --out paths.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import __version__
from .congruences import verify_ramanujan_family, verify_transfer
from .errors import HypothesisError, VerificationError
from .mexfun import ROUTES, p_mtt, p_mtt_identity, p_mtt_series
from .parity import (
    odd_interval_witness,
    odd_witness_tower,
    p_mtt_parity_series,
    parity_recurrence_check,
    parity_scan,
    theta_odd_density,
)
from .partitions import ORACLE_CEILING, MexParams, p_Aa_oracle
from .series import partition_series

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_VERIFICATION = 3
EXIT_IO = 4


class UsageError(Exception):
    """Bad flag combination or out-of-range value; maps to exit code 1."""


def _resolve_out(path: str | None) -> str | None:
    if path is None:
        return None
    base = os.environ.get("MEXPART_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _figure_path(out: str) -> str:
    root, _ = os.path.splitext(out)
    return root + ".png"


def _emit(
    args: argparse.Namespace,
    *,
    command: str,
    params: dict,
    header: Sequence[str],
    rows: Sequence[Sequence],
    text: str,
    report: dict | None = None,
) -> None:
    """Write one run's result in the selected format.

    CSV: header row then one record per row.  JSON: a single object with
    command/params/version metadata, the data array, and the structured
    report when the command produces one.
    """
    if args.format == "text":
        payload = text if text.endswith("\n") else text + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        payload = buf.getvalue()
    else:
        obj: dict = {
            "command": command,
            "params": params,
            "version": __version__,
            "header": list(header),
            "data": [list(r) for r in rows],
        }
        if report is not None:
            obj["report"] = report
        payload = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    out = _resolve_out(args.out)
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)


def _warn_oracle_scale(n: int) -> None:
    if n > ORACLE_CEILING:
        print(
            f"warning: full enumeration at n={n} is past the practical ceiling "
            f"(~{ORACLE_CEILING}); expect a long wait",
            file=sys.stderr,
        )


def _require_plot_target(args: argparse.Namespace) -> str:
    if args.out is None:
        raise UsageError("--plot needs --out to know where the figure goes")
    return _figure_path(_resolve_out(args.out))


# ---------------------------------------------------------------------------
# command handlers


def _cmd_compute(args: argparse.Namespace) -> int:
    if args.A is not None or args.a is not None:
        if args.A is None or args.a is None or args.m is not None or args.t is not None:
            raise UsageError("give either --m/--t or --A/--a, not a mixture")
        _warn_oracle_scale(args.n)
        value = p_Aa_oracle(args.n, args.A, args.a)
        label = f"p_[{args.A},{args.a}]({args.n}) = {value}  [route: oracle]"
        _emit(
            args,
            command="compute",
            params={"A": args.A, "a": args.a, "n": args.n, "route": "oracle"},
            header=("n", "value", "route"),
            rows=[(args.n, value, "oracle")],
            text=label,
        )
        return EXIT_OK
    if args.m is None or args.t is None:
        raise UsageError("compute needs --m and --t (or --A and --a)")
    params = MexParams(args.m, args.t)
    checked = not args.unchecked
    route = args.route
    if route == "oracle":
        _warn_oracle_scale(args.n)
    value = p_mtt(params, args.n, route, checked=checked)
    suffix = " (cross-checked)" if checked else ""
    label = f"p_[{params.A},{params.a}]({args.n}) = {value}  [route: {route}{suffix}]"
    _emit(
        args,
        command="compute",
        params={"m": args.m, "t": args.t, "n": args.n, "route": route, "checked": checked},
        header=("n", "value", "route"),
        rows=[(args.n, value, route)],
        text=label,
    )
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    p_series = partition_series(args.nmax)
    if args.A is not None or args.a is not None:
        if args.A is None or args.a is None or args.m is not None or args.t is not None:
            raise UsageError("give either --m/--t or --A/--a, not a mixture")
        _warn_oracle_scale(args.nmax)
        values = [p_Aa_oracle(n, args.A, args.a) for n in range(args.nmax + 1)]
        meta = {"A": args.A, "a": args.a, "nmax": args.nmax, "route": "oracle"}
        title = f"p_[{args.A},{args.a}] by enumeration"
    else:
        if args.m is None or args.t is None:
            raise UsageError("table needs --m and --t (or --A and --a)")
        params = MexParams(args.m, args.t)
        counter = p_mtt_series(params, args.nmax)
        values = list(counter.coeffs)
        if not args.unchecked:
            for n in range(args.nmax + 1):
                other = p_mtt_identity(params, n, p_series.coeffs)
                if other != values[n]:
                    raise VerificationError(
                        f"series and identity routes disagree at n={n}: "
                        f"{values[n]} vs {other}",
                        n=n,
                        series=values[n],
                        identity=other,
                    )
        meta = {
            "m": args.m,
            "t": args.t,
            "nmax": args.nmax,
            "route": "series",
            "checked": not args.unchecked,
        }
        title = f"p_[{params.A},{params.a}] by generating function"
    rows = [(n, p_series[n], values[n]) for n in range(args.nmax + 1)]
    lines = [title, "n  p(n)  counter"]
    lines += [f"{n}  {p}  {v}" for n, p, v in rows]
    _emit(
        args,
        command="table",
        params=meta,
        header=("n", "partition_count", "counter"),
        rows=rows,
        text="\n".join(lines),
    )
    return EXIT_OK


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    params = MexParams(args.m, args.t)
    _warn_oracle_scale(args.nmax)
    p_series = partition_series(args.nmax)
    counter = p_mtt_series(params, args.nmax)
    rows = []
    bad = []
    for n in range(args.nmax + 1):
        o = p_Aa_oracle(n, params.A, params.a)
        s = counter[n]
        i = p_mtt_identity(params, n, p_series.coeffs)
        rows.append((n, o, s, i))
        if not o == s == i:
            bad.append(n)
    if bad:
        raise VerificationError(
            f"routes disagree for m={args.m}, t={args.t} at n in {bad}", positions=bad
        )
    text = (
        f"oracle = series = identity for all n <= {args.nmax} "
        f"(m={args.m}, t={args.t}; {args.nmax + 1} values checked)"
    )
    _emit(
        args,
        command="oracle-check",
        params={"m": args.m, "t": args.t, "nmax": args.nmax},
        header=("n", "oracle", "series", "identity"),
        rows=rows,
        text=text,
    )
    return EXIT_OK


def _cmd_parity_scan(args: argparse.Namespace) -> int:
    params = MexParams(args.m, args.t)
    parities = p_mtt_parity_series(params, args.X)
    report = parity_scan(params, args.X, include_witnesses=args.witnesses, parities=parities)
    rows = [(n, parities.bit(n)) for n in range(1, args.X + 1)]
    text = "\n".join(
        [
            f"parity scan of p_[{params.A},{params.a}] over n = 1..{args.X}",
            f"even: {report.even_count}   odd: {report.odd_count}",
            f"threshold sqrt(X/3) = {report.threshold:.4f}   "
            f"meets threshold: {report.meets_threshold}",
        ]
    )
    _emit(
        args,
        command="parity-scan",
        params={"m": args.m, "t": args.t, "X": args.X},
        header=("n", "odd"),
        rows=rows,
        text=text,
        report=report.to_dict(),
    )
    if args.plot:
        fig_path = _require_plot_target(args)
        from .figures import save_even_count_figure

        save_even_count_figure(report, parities, fig_path)
    return EXIT_OK


def _cmd_lemma3(args: argparse.Namespace) -> int:
    params = MexParams(args.m, args.t)
    parities = p_mtt_parity_series(params, args.nmax)
    rows = []
    mismatches = []
    for n in range(1, args.nmax + 1):
        computed, expected = parity_recurrence_check(params, n, parities=parities)
        rows.append((n, computed, expected))
        if computed != expected:
            mismatches.append(n)
    if mismatches:
        raise VerificationError(
            f"parity recurrence fails for m={args.m}, t={args.t} at n in {mismatches}",
            positions=mismatches,
        )
    text = (
        f"mod-2 pentagonal recurrence holds for all n = 1..{args.nmax} "
        f"(m={args.m}, t={args.t})"
    )
    _emit(
        args,
        command="lemma3",
        params={"m": args.m, "t": args.t, "nmax": args.nmax},
        header=("n", "computed", "expected"),
        rows=rows,
        text=text,
    )
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace) -> int:
    params = MexParams(args.m, args.t)
    witness = odd_interval_witness(params, args.r)
    lo, hi = 2 * args.r - 1, args.r * (3 * args.r - 1) // 2
    if witness is None:
        print(
            f"r={args.r} does not satisfy the witness hypothesis for m={args.m}, "
            f"t={args.t} (r(3r-1) is a doubled theta exponent) and the interval "
            f"[{lo}, {hi}] holds no odd value",
            file=sys.stderr,
        )
        return EXIT_HYPOTHESIS
    text = f"p_[{params.A},{params.a}] is odd at n = {witness}, inside [{lo}, {hi}]"
    _emit(
        args,
        command="witness",
        params={"m": args.m, "t": args.t, "r": args.r},
        header=("r", "lo", "hi", "witness"),
        rows=[(args.r, lo, hi, witness)],
        text=text,
    )
    return EXIT_OK


def _cmd_theorem5(args: argparse.Namespace) -> int:
    results = odd_witness_tower(args.m, args.p, args.X, args.s)
    rows = [(i, lo, hi, w) for i, ((lo, hi), w) in enumerate(results)]
    lines = [
        f"odd witnesses for p_[{args.m * args.p},{args.p}] along the tower "
        f"(seed {args.s}, X = {args.X}): {len(results)} interval(s)"
    ]
    lines += [f"  [{lo}, {hi}] -> n = {w}" for _, lo, hi, w in rows]
    _emit(
        args,
        command="theorem5",
        params={"m": args.m, "p": args.p, "X": args.X, "s": args.s},
        header=("interval_index", "lo", "hi", "witness"),
        rows=rows,
        text="\n".join(lines),
    )
    return EXIT_OK


def _cmd_congruence(args: argparse.Namespace) -> int:
    generic = args.a is not None or args.b is not None
    if args.family is not None and generic:
        raise UsageError("give either --family or --a/--b, not both")
    if args.family is not None:
        report = verify_ramanujan_family(args.family, args.k, args.m, args.t, args.nmax)
    elif generic:
        if args.a is None or args.b is None:
            raise UsageError("a generic progression needs both --a and --b")
        report = verify_transfer(args.a, args.b, args.k, args.m, args.t, args.nmax)
    else:
        raise UsageError("congruence needs --family or an explicit --a/--b progression")
    step, offset = report.progression
    failset = set(report.failures)
    rows = [(n, step * n + offset, 1 if n in failset else 0) for n in range(report.n_max + 1)]
    verdict = "all divisible" if report.ok else f"FAILURES at n in {list(report.failures)}"
    text = (
        f"p_[m*a*t={report.m}*{step}*{report.t}] on {step}n+{offset} mod {report.modulus}: "
        f"{report.residues_checked} residues checked, {verdict}"
    )
    _emit(
        args,
        command="congruence",
        params={
            "family": args.family,
            "k": args.k,
            "m": args.m,
            "t": args.t,
            "nmax": args.nmax,
            "a": step,
            "b": offset,
        },
        header=("n", "argument", "failed"),
        rows=rows,
        text=text,
        report=report.to_dict(),
    )
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def _cmd_export(args: argparse.Namespace) -> int:
    params = MexParams(args.m, args.t)
    if args.what == "b-density":
        rows = theta_odd_density(params, args.X)
        header = ("x", "odd_count", "density")
        lines = [f"theta parity density for m={args.m}, t={args.t}, X={args.X}"]
        lines += [f"{x}  {c}  {d:.6f}" for x, c, d in rows]
        text = "\n".join(lines)
    elif args.what == "parity-bits":
        parities = p_mtt_parity_series(params, args.X)
        rows = [(n, parities.bit(n)) for n in range(args.X + 1)]
        header = ("n", "odd")
        text = "\n".join(f"{n}  {b}" for n, b in rows)
    else:  # p-table
        series = partition_series(args.X)
        rows = [(n, series[n]) for n in range(args.X + 1)]
        header = ("n", "p")
        text = "\n".join(f"{n}  {v}" for n, v in rows)
    _emit(
        args,
        command="export",
        params={"what": args.what, "m": args.m, "t": args.t, "X": args.X},
        header=header,
        rows=rows,
        text=text,
    )
    if args.plot:
        if args.what != "b-density":
            raise UsageError("--plot is only meaningful for --what b-density")
        fig_path = _require_plot_target(args)
        from .figures import save_density_figure

        save_density_figure(rows, f"m={args.m}, t={args.t}", fig_path)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _positive(name: str):
    def parse(text: str) -> int:
        value = int(text)
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be at least 1")
        return value

    return parse


def _non_negative(name: str):
    def parse(text: str) -> int:
        value = int(text)
        if value < 0:
            raise argparse.ArgumentTypeError(f"{name} must be non-negative")
        return value

    return parse


def _add_output_options(sub: argparse.ArgumentParser, plot: bool = False) -> None:
    sub.add_argument(
        "--format", choices=("text", "csv", "json"), default="text", help="output format"
    )
    sub.add_argument(
        "--out",
        default=None,
        help="output path (stdout when omitted; relative paths honor MEXPART_OUTPUT_DIR)",
    )
    if plot:
        sub.add_argument(
            "--plot",
            action="store_true",
            help="also render a figure next to --out (same name, .png)",
        )


def _add_mt_options(sub: argparse.ArgumentParser, required: bool = True) -> None:
    sub.add_argument("--m", type=_positive("m"), default=None, required=False, help="family m")
    sub.add_argument("--t", type=_positive("t"), default=None, required=False, help="family t")
    if required:
        pass  # cross-checked in the handler so --A/--a alternatives stay possible


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mexpart",
        description=(
            "Mex-conditioned partition counters: compute them by independent "
            "routes and verify their parity and congruence properties."
        ),
    )
    parser.add_argument("--version", action="version", version=f"mexpart {__version__}")
    parser.add_argument(
        "--rng-seed",
        type=int,
        default=None,
        help="reserved; every computation is deterministic and ignores it",
    )
    commands = parser.add_subparsers(dest="command")

    sub = commands.add_parser("compute", help="one counter value, cross-checked by default")
    _add_mt_options(sub)
    sub.add_argument("--A", type=_positive("A"), default=None, help="mex modulus (oracle only)")
    sub.add_argument("--a", type=_positive("a"), default=None, help="mex residue (oracle only)")
    sub.add_argument("--n", type=_non_negative("n"), required=True, help="argument n")
    sub.add_argument("--route", choices=ROUTES, default="series", help="route to report")
    sub.add_argument("--unchecked", action="store_true", help="skip cross-route verification")
    _add_output_options(sub)
    sub.set_defaults(func=_cmd_compute)

    sub = commands.add_parser("table", help="tabulate counter values over 0..nmax")
    _add_mt_options(sub)
    sub.add_argument("--A", type=_positive("A"), default=None, help="mex modulus (oracle only)")
    sub.add_argument("--a", type=_positive("a"), default=None, help="mex residue (oracle only)")
    sub.add_argument("--nmax", type=_non_negative("nmax"), default=40, help="upper bound")
    sub.add_argument("--unchecked", action="store_true", help="skip the identity cross-check")
    _add_output_options(sub)
    sub.set_defaults(func=_cmd_table)

    sub = commands.add_parser(
        "oracle-check", help="verify oracle = series = identity over 0..nmax"
    )
    sub.add_argument("--m", type=_positive("m"), required=True)
    sub.add_argument("--t", type=_positive("t"), required=True)
    sub.add_argument("--nmax", type=_non_negative("nmax"), default=40, help="upper bound")
    _add_output_options(sub)
    sub.set_defaults(func=_cmd_oracle_check)

    sub = commands.add_parser("parity-scan", help="even/odd tallies over 1..X")
    sub.add_argument("--m", type=_positive("m"), required=True)
    sub.add_argument("--t", type=_positive("t"), required=True)
    sub.add_argument("--X", type=_positive("X"), default=10_000, help="scan ceiling")
    sub.add_argument(
        "--witnesses", action="store_true", help="include odd positions in the JSON report"
    )
    _add_output_options(sub, plot=True)
    sub.set_defaults(func=_cmd_parity_scan)

    sub = commands.add_parser(
        "lemma3", help="check the mod-2 pentagonal recurrence for n = 1..nmax"
    )
    sub.add_argument("--m", type=_positive("m"), required=True)
    sub.add_argument("--t", type=_positive("t"), required=True)
    sub.add_argument("--nmax", type=_positive("nmax"), default=1000, help="upper bound")
    _add_output_options(sub)
    sub.set_defaults(func=_cmd_lemma3)

    sub = commands.add_parser(
        "witness", help="least odd counter value in [2r-1, r(3r-1)/2]"
    )
    sub.add_argument("--m", type=_positive("m"), required=True)
    sub.add_argument("--t", type=_positive("t"), required=True)
    sub.add_argument("--r", type=_positive("r"), required=True, help="interval parameter, >= 2")
    _add_output_options(sub)
    sub.set_defaults(func=_cmd_witness)

    sub = commands.add_parser(
        "theorem5", help="odd witnesses along the pentagonal tower below X"
    )
    sub.add_argument("--m", type=_positive("m"), required=True)
    sub.add_argument("--p", type=_positive("p"), required=True, help="prime, 1 mod 3")
    sub.add_argument("--X", type=_positive("X"), default=2000, help="tower ceiling")
    sub.add_argument("--s", type=_positive("s"), default=2, help="tower seed, 2 mod 3")
    _add_output_options(sub)
    sub.set_defaults(func=_cmd_theorem5)

    sub = commands.add_parser(
        "congruence", help="verify a divisibility family or explicit progression"
    )
    sub.add_argument("--family", type=int, choices=(5, 7, 11), default=None)
    sub.add_argument(
        "--k",
        type=_positive("k"),
        required=True,
        help="family power with --family, else the modulus",
    )
    sub.add_argument("--a", type=_positive("a"), default=None, help="progression step")
    sub.add_argument("--b", type=_non_negative("b"), default=None, help="progression offset")
    sub.add_argument("--m", type=_positive("m"), required=True)
    sub.add_argument("--t", type=_positive("t"), required=True)
    sub.add_argument("--nmax", type=_non_negative("nmax"), default=200, help="progression range")
    _add_output_options(sub)
    sub.set_defaults(func=_cmd_congruence)

    sub = commands.add_parser("export", help="emit datasets for external analysis")
    sub.add_argument(
        "--what",
        choices=("b-density", "parity-bits", "p-table"),
        required=True,
        help="which dataset",
    )
    sub.add_argument("--m", type=_positive("m"), default=1)
    sub.add_argument("--t", type=_positive("t"), default=1)
    sub.add_argument("--X", type=_positive("X"), default=10_000, help="range ceiling")
    _add_output_options(sub, plot=True)
    sub.set_defaults(func=_cmd_export)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage; remap to our taxonomy
        code = exc.code if exc.code is not None else 0
        return EXIT_OK if code == 0 else EXIT_USAGE
    if getattr(args, "func", None) is None:
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    raise SystemExit(main())

"""Command-line front end.

    locc-negativity en --params A B C D [--eta --triple 1,2,3] [--renorm]
    locc-negativity certify four --params A B C D
    locc-negativity certify three --triple 1,2,3 --params A B C D
    locc-negativity scan --grid N --triple 1,2,3 --out FILE --format csv|json
    locc-negativity validate --grid N [--triple 1,2,3]

Amplitudes are ``re`` or ``re:im``. Results go to stdout as JSON, diagnostics
to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import certifier, measures, qstate, scanner

RENORM_MAX_DEV = 1e-6

CSV_HEADER = (
    "theta1", "theta2", "a", "b", "c", "d", "x", "y",
    "en_rho_numeric", "en_rho_closed", "en_eta_numeric", "en_eta_closed",
    "cond3", "cond4", "verdict_three", "verdict_four", "case_label",
)


class UsageError(Exception):
    pass


def parse_amplitude(text: str) -> complex:
    try:
        if ":" in text:
            re_part, im_part = text.split(":", 1)
            z = complex(float(re_part), float(im_part))
        else:
            z = complex(float(text), 0.0)
    except ValueError:
        raise UsageError(f"cannot parse amplitude {text!r}; use 're' or 're:im'") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise UsageError(f"amplitude {text!r} is not finite")
    return z


def parse_triple(text: str) -> tuple[int, int, int]:
    try:
        return qstate.check_triple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad triple {text!r}: {exc}") from None


def _renormalise(u: complex, v: complex, name: str) -> tuple[complex, complex]:
    norm2 = abs(u) ** 2 + abs(v) ** 2
    if abs(norm2 - 1.0) > RENORM_MAX_DEV:
        raise UsageError(f"|{name}| squared norm {norm2!r} is too far from 1 to renormalise")
    s = 1.0 / math.sqrt(norm2)
    return u * s, v * s


def parse_params(values, renorm: bool) -> qstate.FamilyParams:
    a, b, c, d = (parse_amplitude(v) for v in values)
    if renorm:
        a, b = _renormalise(a, b, "a,b")
        c, d = _renormalise(c, d, "c,d")
    try:
        p = qstate.FamilyParams(a, b, c, d)
    except ValueError as exc:
        raise UsageError(f"{exc} (pass --renorm to rescale inputs off by at most {RENORM_MAX_DEV})") from None
    q, (swap_ab, swap_cd) = p.canonical()
    if swap_ab:
        print("notice: |a| < |b|; using (conj(b), -conj(a)), which swaps |A_1> and |A_2>", file=sys.stderr)
    if swap_cd:
        print("notice: |c| < |d|; using (conj(d), -conj(c)), which swaps |A_3> and |A_4>", file=sys.stderr)
    return q


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([_fmt(getattr(r, k)) for k in CSV_HEADER])
    return buf.getvalue()


def records_to_json(records) -> str:
    return json.dumps([r.to_dict() for r in records], indent=1)


def _params_dict(p: qstate.FamilyParams) -> dict:
    return {k: [getattr(p, k).real, getattr(p, k).imag] for k in "abcd"}


def cmd_en(args) -> dict:
    p = parse_params(args.params, args.renorm)
    if args.eta:
        triple = parse_triple(args.triple)
        res = measures.log_negativity(qstate.build_eta(p, triple), measures.AC_CUT)
        closed = measures.en_eta_closed_form(p, triple)
        state = "eta"
    else:
        if args.triple is not None:
            raise UsageError("--triple only applies together with --eta")
        triple = None
        res = measures.log_negativity(qstate.build_rho(p), measures.AC_CUT)
        closed = measures.en_rho_closed_form(p)
        state = "rho"
    return {
        "state": state,
        "triple": list(triple) if triple else None,
        "cut": str(qstate.AC_BD),
        "params": _params_dict(p),
        "en": res.en,
        "negativity": res.negativity,
        "neg_eigenvalues": list(res.neg_eigenvalues),
        "method": res.method,
        "en_closed_form": closed,
    }


def cmd_certify(args) -> dict:
    p = parse_params(args.params, args.renorm)
    if args.which == "four":
        if args.triple is not None:
            raise UsageError("'certify four' takes no --triple")
        v = certifier.certify_four(p)
    else:
        if args.triple is None:
            raise UsageError("'certify three' needs --triple i,j,k")
        v = certifier.certify_three(p, parse_triple(args.triple))
    return v.to_dict()


def cmd_scan(args) -> None:
    records = scanner.sweep_grid(args.grid, parse_triple(args.triple))
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    print(f"wrote {len(records)} records to {args.out}", file=sys.stderr)


def cmd_validate(args) -> dict:
    report = scanner.cross_validate(scanner.sweep_grid(args.grid, parse_triple(args.triple)))
    return report.to_dict()


def _grid(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("grid size must be at least 2")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locc-negativity",
        description="Logarithmic-negativity certificates of LOCC indistinguishability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p):
        p.add_argument("--params", nargs=4, required=True, metavar=("A", "B", "C", "D"))
        p.add_argument("--renorm", action="store_true",
                       help=f"rescale amplitudes whose norm is off by at most {RENORM_MAX_DEV}")

    p_en = sub.add_parser("en", help="E_N across AC:BD of the four-state (or three-state) mixture")
    add_params(p_en)
    p_en.add_argument("--eta", action="store_true", help="use the three-state mixture")
    p_en.add_argument("--triple", default=None)

    p_cert = sub.add_parser("certify", help="run the distinguishability argument")
    p_cert.add_argument("which", choices=("four", "three"))
    add_params(p_cert)
    p_cert.add_argument("--triple", default=None)

    p_scan = sub.add_parser("scan", help="sweep the (theta1, theta2) grid and write records")
    p_scan.add_argument("--grid", type=_grid, required=True)
    p_scan.add_argument("--triple", default="1,2,3")
    p_scan.add_argument("--out", required=True)
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")

    p_val = sub.add_parser("validate", help="cross-check closed forms against the numeric path")
    p_val.add_argument("--grid", type=_grid, required=True)
    p_val.add_argument("--triple", default="1,2,3")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "en":
            out = cmd_en(args)
        elif args.command == "certify":
            out = cmd_certify(args)
        elif args.command == "scan":
            cmd_scan(args)
            return 0
        else:
            out = cmd_validate(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(out, indent=2))
    if args.command == "validate" and not out["ok"]:
        for msg in out["failures"]:
            print(f"violation: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

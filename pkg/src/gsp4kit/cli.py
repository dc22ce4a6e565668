"""Command line front end.

Exit codes: 0 on success, 2 for invalid input, 3 when an arithmetic step
is undefined on otherwise valid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import qexp as Q
from .atlas import load_descriptor, render_atlas
from .errors import ComputationError, ValidationError
from .euler import EulerInput, euler_factor, fast_path_applies
from .figure import render_ascii, render_svg
from .forms import delta
from .panchishkin import format_table1, regenerate_table1, table1_diff, REFERENCE_WEIGHTS
from .rings import IntegersModPower
from .weights import LABELS, Weights, classify

EXIT_OK, EXIT_INVALID, EXIT_ARITH = 0, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def cmd_classify(args) -> int:
    wt = Weights(args.k1, args.k2, args.c1, args.c2)
    reg = classify(wt)
    _emit(_dump({"region": reg.label, "sign": reg.sign_infinity, "t": wt.t, "w": wt.w, "r": wt.r}), None)
    return EXIT_OK


def cmd_figure(args) -> int:
    if args.format == "svg":
        text = render_svg(args.k1, args.k2, args.extent)
    else:
        text = render_ascii(args.k1, args.k2, args.extent) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_table1(args) -> int:
    rows = regenerate_table1(args.k1, args.k2)
    diff = table1_diff(args.k1, args.k2)
    if args.format == "json":
        text = _dump(
            {
                "weights": [args.k1, args.k2],
                "rows": {k: {"pattern": p, "parabolic": list(par)} for k, (p, par) in rows.items()},
                "diff": diff,
            }
        )
    else:
        text = format_table1(rows) + "\n" + ("no differences\n" if not diff else "\n".join(diff) + "\n")
    _emit(text, args.out)
    return EXIT_OK


def cmd_euler(args) -> int:
    inp = EulerInput.from_record(_read_json(args.input))
    region = None if args.region == "auto" else args.region
    value = euler_factor(inp, region, strict=args.strict)
    out = {
        "region": classify(inp.weights).label,
        "w": inp.weights.w,
        "value": value.to_record(),
        "display": str(value),
        "valuation": str(value.valuation(inp.p)) if value else "inf",
        "fast_path_nonvanishing": fast_path_applies(inp),
    }
    _emit(_dump(out), args.out)
    return EXIT_OK


def _load_series(path: str) -> Q.QExpansion:
    return Q.QExpansion.from_record(_read_json(path))


def cmd_qexp(args) -> int:
    op = args.qop
    if op == "delta":
        f = delta(args.n)
        if args.p is not None:
            f = f.change_ring(IntegersModPower(args.p, args.M))
        _emit(_dump(f.to_record()), args.out)
        return EXIT_OK
    f = _load_series(args.input)
    if op == "deplete":
        g = Q.p_deplete(f, args.p)
    elif op == "theta":
        g = Q.theta_power(f, args.t)
    elif op == "stabilize":
        g = Q.p_stabilize(f, args.p, args.branch)
    elif op == "specialize":
        g = Q.specialize(f, args.k)
    elif op == "hecke":
        g = Q.hecke_T(f, args.l)
    elif op == "up":
        g = Q.u_p(f, args.p)
    else:  # pragma: no cover - argparse restricts choices
        raise ValidationError(f"unknown operation {op}")
    _emit(_dump(g.to_record()), args.out)
    return EXIT_OK


def cmd_atlas(args) -> int:
    fd = load_descriptor(args.input)
    _emit(render_atlas(fd, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gsp4kit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="region, sign, t and w of a weight quadruple")
    for name in ("k1", "k2", "c1", "c2"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("figure", help="draw the regions for fixed (k1, k2)")
    p.add_argument("k1", type=int)
    p.add_argument("k2", type=int)
    p.add_argument("--format", choices=("svg", "text"), default="text")
    p.add_argument("--extent", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("table1", help="recompute the contributing-eigenvalue table and diff it")
    p.add_argument("--k1", type=int, default=REFERENCE_WEIGHTS[0])
    p.add_argument("--k2", type=int, default=REFERENCE_WEIGHTS[1])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("euler", help="Euler factor at p from a JSON parameter file")
    p.add_argument("--input", required=True)
    p.add_argument("--region", choices=("auto",) + LABELS, default="auto")
    p.add_argument("--strict", action="store_true", help="reject parameters that are not tempered")
    p.add_argument("--out")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("qexp", help="operators on q-expansions stored as JSON")
    qs = p.add_subparsers(dest="qop", required=True)
    d = qs.add_parser("delta", help="write Delta to the given truncation")
    d.add_argument("--n", type=int, default=100)
    d.add_argument("--p", type=int)
    d.add_argument("--M", type=int, default=10)
    d.add_argument("--out")
    for name, extra in (
        ("deplete", [("--p", int, True)]),
        ("theta", [("--t", int, True)]),
        ("stabilize", [("--p", int, True), ("--branch", int, False)]),
        ("specialize", [("--k", int, True)]),
        ("hecke", [("--l", int, True)]),
        ("up", [("--p", int, True)]),
    ):
        s = qs.add_parser(name)
        s.add_argument("--input", required=True)
        for flag, typ, req in extra:
            if req:
                s.add_argument(flag, type=typ, required=True)
            else:
                s.add_argument(flag, type=typ, default=0)
        s.add_argument("--out")
    p.set_defaults(func=cmd_qexp)

    p = sub.add_parser("atlas", help="sign map, expected objects and reciprocity edges of a family")
    p.add_argument("--input", required=True, help="family descriptor (.json or .toml)")
    p.add_argument("--format", choices=("json", "svg", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_atlas)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ComputationError as exc:
        print(f"arithmetic error: {exc}", file=sys.stderr)
        return EXIT_ARITH
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

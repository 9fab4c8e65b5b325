"""Command-line front end.

Subcommands: contain, decompose, count, gf, series, verify.  Data goes to
stdout (plain text, CSV, or JSON with --json); diagnostics go to stderr.
Exit codes: 0 success (or verification match), 1 verification mismatch or
runtime failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .counting import (
    ClassSpec,
    CountTable,
    MemberLimitError,
    enumerate_av,
    enumerate_xu,
    member_cap_from_env,
)
from .engine import class_gf
from .perms import contains, format_perm, parse_perm
from .ratfun import Poly, RationalFunction, series_expand
from .septree import build_tree, tree_to_text
from .uclass import USpec

DEFAULT_SERIES_ORDER = 10


def _coeff_json(c: Fraction):
    return int(c) if c.denominator == 1 else str(c)


def _parse_basis(text: str) -> ClassSpec:
    tokens = [t.strip() for t in text.split(";")]
    return ClassSpec.from_patterns([t for t in tokens if t])


def _parse_u(text: str) -> USpec:
    if text == "trivial":
        return USpec.trivial()
    if text in ("inc", "increasing"):
        return USpec.increasing()
    if text in ("dec", "decreasing"):
        return USpec.decreasing()
    if text.startswith("file:"):
        path = text[len("file:"):]
        with open(path, "r", encoding="utf-8") as fh:
            perms = [parse_perm(line) for line in fh if line.strip()]
        try:
            return USpec.finite(perms)
        except ValueError:
            print(
                f"warning: {path} is not downward closed; completing its closure",
                file=sys.stderr,
            )
            return USpec.finite(perms, complete=True)
    raise ValueError(f"unknown U specification {text!r} (trivial|inc|dec|file:PATH)")


def _gf_json(f: RationalFunction) -> dict:
    num, den = f.display_pair()
    return {
        "num": [_coeff_json(c) for c in num],
        "den": [_coeff_json(c) for c in den],
    }


def _cmd_contain(args) -> int:
    pi = parse_perm(args.pi)
    sigma = parse_perm(args.sigma)
    result = contains(pi, sigma)
    if args.json:
        print(json.dumps({
            "pi": format_perm(pi),
            "sigma": format_perm(sigma),
            "contains": result,
        }))
    else:
        print("true" if result else "false")
    return 0


def _cmd_decompose(args) -> int:
    pi = parse_perm(args.pi)
    tree = build_tree(pi)
    if args.json:
        print(json.dumps({
            "pi": format_perm(pi),
            "separable": tree is not None,
            "tree": tree_to_text(tree) if tree is not None else None,
        }))
    else:
        print(tree_to_text(tree) if tree is not None else "not separable")
    return 0


def _count_table(args) -> CountTable:
    spec = _parse_basis(args.basis)
    cap = member_cap_from_env()
    if args.in_x_u is not None:
        u = _parse_u(args.in_x_u)
        return enumerate_xu(
            u, spec, args.max, keep_members=args.members, member_cap=cap
        )
    return enumerate_av(spec, args.max, keep_members=args.members, member_cap=cap)


def _cmd_count(args) -> int:
    table = _count_table(args)
    if args.json:
        rows = []
        for n in range(1, table.max_length + 1):
            row: dict = {"n": n, "count": table.count(n)}
            if args.members:
                row["members"] = [format_perm(p) for p in table.members_of_length(n)]
            rows.append(row)
        print(json.dumps({"counts": rows}))
        return 0
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "count", "members"] if args.members else ["n", "count"])
    for n in range(1, table.max_length + 1):
        if args.members:
            member_text = " ".join(
                format_perm(p) for p in table.members_of_length(n)
            )
            writer.writerow([n, table.count(n), member_text])
        else:
            writer.writerow([n, table.count(n)])
    return 0


def _cmd_gf(args) -> int:
    u = _parse_u(args.u)
    spec = _parse_basis(args.basis)
    f = class_gf(u, spec)
    coeffs = None
    if args.series is not None:
        coeffs = [int(c) for c in series_expand(f, args.series).coeffs]
    if args.json:
        payload = {
            "u": u.describe(),
            "basis": [format_perm(b) for b in spec.basis],
            "gf": _gf_json(f),
        }
        if coeffs is not None:
            payload["series"] = coeffs
        print(json.dumps(payload))
        return 0
    print(f"gf: {f.pretty()}")
    num, den = f.display_pair()
    print("num: " + ",".join(str(c) for c in num))
    print("den: " + ",".join(str(c) for c in den))
    if coeffs is not None:
        print(f"series[0..{args.series}]: " + ",".join(str(c) for c in coeffs))
    return 0


def _parse_coeffs(text: str) -> Poly:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(Fraction(token))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid coefficient {token!r}") from exc
    return Poly(values)


def _cmd_series(args) -> int:
    f = RationalFunction(_parse_coeffs(args.num), _parse_coeffs(args.den))
    coeffs = series_expand(f, args.max).coeffs
    if args.json:
        print(json.dumps({
            "gf": _gf_json(f),
            "coefficients": [_coeff_json(c) for c in coeffs],
        }))
    else:
        print(f"series[0..{args.max}]: " + ",".join(str(c) for c in coeffs))
    return 0


def _cmd_verify(args) -> int:
    u = _parse_u(args.u)
    spec = _parse_basis(args.basis)
    f = class_gf(u, spec)
    expansion = [int(c) for c in series_expand(f, args.max).coeffs[1:]]
    table = enumerate_xu(u, spec, args.max, member_cap=member_cap_from_env())
    counted = list(table.counts)
    mismatch = None
    for n in range(1, args.max + 1):
        if expansion[n - 1] != counted[n - 1]:
            mismatch = n
            break
    if args.json:
        print(json.dumps({
            "u": u.describe(),
            "basis": [format_perm(b) for b in spec.basis],
            "gf": _gf_json(f),
            "gf_series": expansion,
            "enumerated": counted,
            "ok": mismatch is None,
            "first_mismatch": mismatch,
        }))
    elif mismatch is None:
        print(f"verify: ok (lengths 1..{args.max}, gf {f.pretty()})")
    else:
        print(
            f"verify: mismatch at length {mismatch}: "
            f"gf gives {expansion[mismatch - 1]}, enumeration gives {counted[mismatch - 1]}"
        )
    return 0 if mismatch is None else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permclass",
        description="Exact enumeration and rational generating functions for "
        "subclasses of the separable permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contain", help="does PI contain the pattern SIGMA?")
    p.add_argument("pi")
    p.add_argument("sigma")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_contain)

    p = sub.add_parser("decompose", help="print the separating tree of PI")
    p.add_argument("pi")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("count", help="enumerate Av(basis), optionally inside X[U]")
    p.add_argument("--basis", default="", help="semicolon-separated patterns")
    p.add_argument("--max", type=int, required=True, help="largest length to count")
    p.add_argument(
        "--in-x-u",
        metavar="U",
        default=None,
        help="restrict to the X-inflation of U (trivial|inc|dec|file:PATH)",
    )
    p.add_argument("--members", action="store_true", help="also list members per length")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("gf", help="rational generating function of X[U] avoiding basis")
    p.add_argument("--u", default="trivial", help="trivial|inc|dec|file:PATH")
    p.add_argument("--basis", default="")
    p.add_argument(
        "--series",
        type=int,
        nargs="?",
        const=DEFAULT_SERIES_ORDER,
        default=None,
        help=f"also expand the series (default order {DEFAULT_SERIES_ORDER})",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("series", help="expand a rational function as a power series")
    p.add_argument("--num", required=True, help="comma-separated ascending coefficients")
    p.add_argument("--den", required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("verify", help="compare the engine against exhaustive counts")
    p.add_argument("--u", default="trivial")
    p.add_argument("--basis", default="")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MemberLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

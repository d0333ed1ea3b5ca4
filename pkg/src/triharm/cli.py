"""Command-line surface.

Subcommands: paths, tamari, parking, harmonics, nabla3, verify.
Exit codes: 0 on success (all verifications passed), 1 when a
verification failed, 2 on usage errors.  Output is deterministic for
fixed inputs: JSON keys are sorted and parallel workers never reorder
results.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import verify as verify_mod
from .nabla3 import h3, specialize_q111, tnk_erratum_report
from .parking import all_parking, count_parking
from .qpoly import schur_decompose_q3
from .tamari import build_poset, enumerate_paths, fuss_catalan


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--cache-dir", default=None)


def _emit_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=str)


def _schur_text(poly) -> str:
    dec = schur_decompose_q3(poly)
    bits = []
    for mu in sorted(dec, key=lambda m: (sum(m), m)):
        name = "1" if not mu else "s[" + ",".join(map(str, mu)) + "]"
        c = dec[mu]
        bits.append(name if c == 1 else f"{c}*{name}")
    return " + ".join(bits) if bits else "0"


def cmd_paths(args) -> int:
    if args.count:
        out = len(enumerate_paths(args.n, args.r))
        assert out == fuss_catalan(args.n, args.r)
        print(out)
        return 0
    paths = [str(p) for p in enumerate_paths(args.n, args.r)]
    print(_emit_json(paths) if args.format == "json" else "\n".join(paths))
    return 0


def cmd_tamari(args) -> int:
    poset = build_poset(args.n, args.r, args.cache_dir)
    if args.count:
        print(len(poset))
        return 0
    if args.intervals:
        rows = [
            {"beta": str(b), "i_poly": list(poset.interval_poly(b)), "i": poset.interval_count(b)}
            for b in poset.elements
        ]
        if args.format == "json":
            print(_emit_json(rows))
        else:
            for row in rows:
                print(f"{row['beta']}: i(q) coeffs {row['i_poly']}, i = {row['i']}")
        return 0
    covers = sorted(
        (str(poset.elements[i]), str(poset.elements[j]))
        for i, lst in enumerate(poset.up_cover_lists)
        for j in lst
    )
    if args.format == "json":
        print(_emit_json({"n": args.n, "r": args.r, "covers": covers}))
    else:
        for a, b in covers:
            print(f"{a} -> {b}")
    return 0


def cmd_parking(args) -> int:
    if args.count:
        print(count_parking(args.n, args.r))
        return 0
    rows = [pf.to_json() for pf in all_parking(args.n, args.r)]
    if args.format == "json":
        print(_emit_json(rows))
    else:
        for row in rows:
            f = "".join(map(str, row["f"])) if all(v <= 9 for v in row["f"]) else str(row["f"])
            print(f"{f}  shape={''.join(map(str, row['shape']))}  co={tuple(row['co'])}  dinv={row['dinv']}")
    return 0


def cmd_harmonics(args) -> int:
    from .harmonics import (
        closure_space,
        graded_frobenius,
        higher_space,
        hilbert_series,
        isotypic_split_n2,
        kernel_space,
    )

    if args.higher is not None:
        space = higher_space(args.n, args.higher, args.cutoff)
        label = f"H_{args.n}^({args.higher})"
    elif args.closure:
        space = closure_space(args.n)
        label = f"closure_{args.n}"
    else:
        space = kernel_space(args.n, args.cutoff)
        label = f"H_{args.n}"
    hilb = hilbert_series(space)
    if args.frobenius:
        frob = graded_frobenius(space)
        if args.format == "json":
            payload = {
                "space": label,
                "frobenius": {
                    ",".join(map(str, lam)): {
                        "terms": poly.to_json(),
                        "schur_q": {
                            ",".join(map(str, mu)): c for mu, c in schur_decompose_q3(poly).items()
                        },
                    }
                    for lam, poly in frob.items()
                },
            }
            print(_emit_json(payload))
        else:
            for lam in sorted(frob, reverse=True):
                print(f"S[{','.join(map(str, lam))}]: {_schur_text(frob[lam])}")
        return 0
    if args.format == "json":
        payload = {
            "space": label,
            "dimension": space.dimension(),
            "dims": {",".join(map(str, d)): k for d, k in space.dims_by_degree().items()},
            "hilbert": hilb.to_json(),
            "schur_q": {",".join(map(str, mu)): c for mu, c in schur_decompose_q3(hilb).items()},
        }
        if args.n == 2 and args.higher is not None:
            inv, alt = isotypic_split_n2(space, args.higher)
            payload["invariant_dim"] = inv
            payload["alternant_dim"] = alt
        print(_emit_json(payload))
    else:
        print(hilb.text())
    return 0


def cmd_nabla3(args) -> int:
    v = h3(args.r)
    if args.at_q111:
        triple = specialize_q111(v)
        print(_emit_json(list(triple)) if args.format == "json" else f"{triple[0]} {triple[1]} {triple[2]}")
        return 0
    if args.erratum:
        rep = tnk_erratum_report()
        print(_emit_json(rep) if args.format == "json" else rep["statement"])
        return 0
    if args.format == "json":
        print(_emit_json(v.to_json()))
    else:
        print(f"S3:   {v.c3.text()}")
        print(f"S21:  {v.c21.text()}")
        print(f"S111: {v.c111.text()}")
    return 0


def _run_identity(task):
    name, params = task
    fn = verify_mod.IDENTITIES[name]
    result = fn(**params)
    return result if isinstance(result, list) else [result]


def _render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return _emit_json([r.to_json() for r in reports])
    lines = []
    for r in reports:
        tag = "PASS" if r.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        lhs = r.lhs if isinstance(r.lhs, (int, str)) else json.dumps(r.lhs, sort_keys=True, default=str)
        rhs = r.rhs if isinstance(r.rhs, (int, str)) else json.dumps(r.rhs, sort_keys=True, default=str)
        op = "=" if r.passed else "!="
        lines.append(f"[{tag}] {r.identity} {params}: {lhs} {op} {rhs}")
        if not r.passed and r.witness is not None:
            lines.append(f"       witness: {json.dumps(r.witness, sort_keys=True, default=str)}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.identity == "all":
        config = verify_mod.default_config()
    else:
        if args.identity not in verify_mod.IDENTITIES:
            print(f"unknown identity {args.identity!r}; known: {sorted(verify_mod.IDENTITIES)}", file=sys.stderr)
            return 2
        params = {}
        if args.identity == "gen-series":
            params = {"a": args.a, "b": args.b, "order": args.order}
        elif args.identity == "cauchy":
            params = {"n": args.n}
        else:
            params = {"n": args.n, "r": args.r}
        config = [(args.identity, params)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(_run_identity, config))
    else:
        chunks = [_run_identity(t) for t in config]
    reports = [r for chunk in chunks for r in chunk]
    print(_render_reports(reports, args.format))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triharm",
        description="Exact checks for trivariate diagonal harmonics and r-Tamari combinatorics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", help="enumerate r-Dyck paths")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--count", action="store_true")
    _common(p)
    p.set_defaults(fn=cmd_paths)

    p = sub.add_parser("tamari", help="r-Tamari poset covers and interval polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--count", action="store_true")
    p.add_argument("--intervals", action="store_true")
    _common(p)
    p.set_defaults(fn=cmd_tamari)

    p = sub.add_parser("parking", help="r-parking functions with statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--count", action="store_true")
    _common(p)
    p.set_defaults(fn=cmd_parking)

    p = sub.add_parser("harmonics", help="harmonic spaces, Hilbert series, Frobenius")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--hilbert", action="store_true")
    p.add_argument("--frobenius", action="store_true")
    p.add_argument("--closure", action="store_true")
    p.add_argument("--higher", type=int, default=None, metavar="R")
    p.add_argument("--cutoff", type=int, default=None, metavar="D")
    _common(p)
    p.set_defaults(fn=cmd_harmonics)

    p = sub.add_parser("nabla3", help="iterated nabla at n = 3")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--at-q111", dest="at_q111", action="store_true")
    p.add_argument("--erratum", action="store_true")
    _common(p)
    p.set_defaults(fn=cmd_nabla3)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("identity", help="identity name or 'all'")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--order", type=int, default=12)
    _common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    return args.fn(args)


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()

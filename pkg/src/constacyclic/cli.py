"""Command-line interface.

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 success (for
``equiv``: equivalence detected), 3 equivalence not detected, 64 usage
error, 65 malformed input data, 70 internal failure, 1 verification failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .codes import CodeError, LinearCode, cc_code, classify, dual, min_distance
from .constructions import (
    BklcError,
    BklcTable,
    DistanceChooser,
    LabelledChooser,
    construction_x,
    recursively_modify,
)
from .cosets import CosetError, cc_params
from .equiv import PartitionTooLarge, cc_coset_eq, partition
from .gf import GF, FieldError
from .grammar import ParseError, parse_element, parse_poly_string, print_element, print_poly
from .polyring import PolyError, generator_from_check

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_NOT_EQUIVALENT = 3
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_SOFTWARE = 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def load_bklc(path: str | Path) -> BklcTable:
    return BklcTable.load(path)


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True, help="field size")
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("--a", default="1", help="shift constant (element grammar, e.g. 2 or A)")


def _params(args):
    F = GF(args.q)
    return cc_params(F, args.n, parse_element(args.a, F))


def _code_from_args(args, params) -> LinearCode:
    F = params.F
    if (args.g is None) == (args.h is None):
        raise UsageError("give exactly one of --g / --h")
    ps = parse_poly_string(args.g if args.g is not None else args.h, F)
    g = ps.poly if args.g is not None else generator_from_check(F, params.n, params.a, ps.poly)
    C = cc_code(params, g)
    return dual(C) if ps.dual else C


def _matrix_rows(C: LinearCode) -> list[str]:
    return ["".join(print_element(int(x), C.F) for x in row) for row in C.G]


# ---------------------------------------------------------------------------


def cmd_equiv(args) -> int:
    params = _params(args)
    F = params.F
    g1 = parse_poly_string(args.g1, F).poly
    g2 = parse_poly_string(args.g2, F).poly
    v = cc_coset_eq(F, args.n, params.a, g1, g2)
    w = v.witness
    if args.json:
        _emit(
            {
                "equivalent": v.equivalent,
                "stage": v.prefilter,
                "witness": {"e": w.e, "b": w.b, "M": w.M} if w else None,
            }
        )
    else:
        line = "equivalent" if v.equivalent else f"not detected (stage: {v.prefilter})"
        if w:
            line += f"; witness z -> {w.e} z + {w.b} mod {w.M}"
        print(line)
    return EXIT_OK if v.equivalent else EXIT_NOT_EQUIVALENT


def cmd_partition(args) -> int:
    res = partition(args.q, args.n, parse_element(args.a, GF(args.q)), parallelism=args.threads, max_total=args.max_total)
    _emit(
        {
            "params": {"q": args.q, "n": args.n, "a": args.a},
            "total": res.total,
            "new": res.new,
            "generators": [print_poly(g) for g in res.generators],
        },
        args.out,
    )
    return EXIT_OK


def cmd_props(args) -> int:
    params = _params(args)
    C = _code_from_args(args, params)
    dist = min_distance(C, cap=args.cap, budget=args.budget)
    props = classify(C, cap=args.cap)
    out = {"params": [C.n, C.k, dist.d], "exact": dist.exact}
    out.update(props.as_dict())
    _emit(out)
    return EXIT_OK


def cmd_mindist(args) -> int:
    params = _params(args)
    C = _code_from_args(args, params)
    r = min_distance(C, cap=args.cap, budget=args.budget, method=args.method)
    _emit({"n": C.n, "k": C.k, "d": r.d, "exact": r.exact, "lower": r.lower, "upper": r.upper, "method": r.method, "words": r.words})
    return EXIT_OK


def _aux_code(F: GF, text: str) -> LinearCode:
    """``rep:N`` for the repetition code, or comma-separated generator rows."""
    if text.startswith("rep:"):
        n = int(text[4:])
        return LinearCode(F, np.ones((1, n), dtype=np.int64), lower=n)
    rows = [list(parse_poly_string(r, F).poly.coeffs) for r in text.split(",")]
    width = max(len(r) for r in rows)
    return LinearCode.from_rows(F, [r + [0] * (width - len(r)) for r in rows])


def cmd_cx(args) -> int:
    params = _params(args)
    F = params.F
    parent = cc_code(params, parse_poly_string(args.parent, F).poly)
    sub = cc_code(params, parse_poly_string(args.sub, F).poly)
    aux = _aux_code(F, args.aux)
    X = construction_x(parent, sub, aux, d_parent=args.d_parent, d_sub=args.d_sub, d_aux=args.d_aux)
    _emit({"n": X.n, "k": X.k, "lower": X.lower, "generator": _matrix_rows(X)})
    return EXIT_OK


def cmd_modify(args) -> int:
    params = _params(args)
    C = _code_from_args(args, params)
    table = load_bklc(args.bklc)
    if args.labels:
        labels = json.loads(Path(args.labels).read_text())
        chooser = LabelledChooser(labels)
        d = args.d
        if d is None:
            raise UsageError("--labels requires --d for the starting code")
    else:
        chooser = DistanceChooser(budget=args.budget, threads=args.threads)
        d = args.d
    found = recursively_modify(C, table, args.max_depth, name=args.name, d=d, chooser=chooser, strict=not args.lenient)
    for f in found:
        print(f"{f.name}: [{f.code.n},{f.code.k},{f.d}]", file=sys.stderr)
    _emit(
        [
            {
                "name": f.name,
                "params": list(f.params),
                "exact": f.exact,
                "lineage": [{"op": s.op, "positions": list(s.positions) if s.positions else None, "params": list(s.resultParams)} for s in f.steps],
            }
            for f in found
        ]
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import golden, plots

    checks = golden.run_all(all_new=args.all_new, threads=args.threads)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(golden.HEADER)
    for c in checks:
        w.writerow(c.row())
    sys.stdout.write(buf.getvalue())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "matrix.csv").write_text(buf.getvalue())
        from .fixtures import partition_rows

        computed = {c.item: int(c.observed) for c in checks if c.item.startswith("new ")}
        rows = partition_rows()
        plots.partition_figure(
            [f"({r.q},{r.n},{r.a})" for r in rows],
            [r.total for r in rows],
            [r.new for r in rows],
            [computed.get(f"new q={r.q} n={r.n} a={r.a}") for r in rows],
            out / "partition.png",
        )
        plots.weight_figure(golden.battery_weight_distributions(), out / "weights.png")
        plots.timing_figure([c.item for c in checks], [c.seconds for c in checks], [c.ok for c in checks], out / "timing.png")
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="constacyclic", description="Constacyclic code workbench")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("equiv", help="coset-based equivalence test")
    _field_args(s)
    s.add_argument("--g1", required=True)
    s.add_argument("--g2", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("partition", help="split all divisors of x^n - a into detected classes")
    _field_args(s)
    s.add_argument("--out")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--max-total", type=int, default=2**25)
    s.set_defaults(func=cmd_partition)

    for name, func, helptext in (("props", cmd_props, "parameters and property flags"), ("mindist", cmd_mindist, "minimum distance report")):
        s = sub.add_parser(name, help=helptext)
        _field_args(s)
        s.add_argument("--g")
        s.add_argument("--h")
        s.add_argument("--cap", type=int, default=2**26)
        s.add_argument("--budget", type=int, default=10**8)
        if name == "mindist":
            s.add_argument("--method", choices=("auto", "enumeration", "information-set"), default="auto")
        s.set_defaults(func=func)

    s = sub.add_parser("cx", help="Construction X from two constacyclic codes and an auxiliary code")
    _field_args(s)
    s.add_argument("--parent", required=True)
    s.add_argument("--sub", required=True)
    s.add_argument("--aux", required=True, help="rep:N or comma-separated generator rows")
    s.add_argument("--d-parent", type=int)
    s.add_argument("--d-sub", type=int)
    s.add_argument("--d-aux", type=int)
    s.set_defaults(func=cmd_cx)

    s = sub.add_parser("modify", help="recursive extend/puncture/shorten search")
    _field_args(s)
    s.add_argument("--g")
    s.add_argument("--h")
    s.add_argument("--bklc", required=True)
    s.add_argument("--max-depth", type=int)
    s.add_argument("--name", default="C")
    s.add_argument("--d", type=int, help="known minimum distance of the starting code")
    s.add_argument("--labels", help="JSON {name: d} used instead of computing distances")
    s.add_argument("--budget", type=int, default=10**7)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--lenient", action="store_true", help="skip (q,n,k) missing from the table")
    s.set_defaults(func=cmd_modify)

    s = sub.add_parser("verify-paper", help="run the bundled reference tables; CSV pass/fail matrix")
    s.add_argument("--out", help="directory for matrix.csv and figures")
    s.add_argument("--all-new", action="store_true", help="also check every class count (slow)")
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, FieldError, CosetError, PolyError, CodeError, BklcError, PartitionTooLarge, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    gwablocks block --preset sl2 --weight 0
    gwablocks dims --n 3 --ext L1 L2 1
    gwablocks hilbert --n 2
    gwablocks submodules --n 5 --object P3/P6
    gwablocks tableau --skew "6,4,3,2 / 4,3"
    gwablocks verify --scope formulas --n-max 8

Exit status: 0 success, 1 usage error, 2 verification failure,
3 resource refusal.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import blockcalc as bc
from . import cartan, repcat, styt, verify
from . import linalg as la
from .objects import Dual, ObjectError, ProjQuot, Simple, Tilting, VermaQuot, all_objects, dim_vector, normalize, parse
from .submodules import DEFAULT_CEILING, ResourceRefusal, enumerate_submodules, expected_count, transfer_psi

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_REFUSED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is bc.UNSUPPORTED:
        return "unsupported"
    return x


def _poly_coeffs(p):
    """Ascending coefficient list from exponent 0."""
    if p.is_zero():
        return []
    return [p.coeff(e) for e in range(p.degree() + 1)]


# block size -----------------------------------------------------------------

def _presentation(args):
    extras = {}
    if args.preset and args.config:
        raise UsageError("give at most one of --preset and --config")
    if args.preset:
        return cartan.PRESETS[args.preset], extras
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            return cartan.parse_config(fh.read())
    return None, extras


def _discover(args, pres, extras):
    default = "1" if pres.kind == "laurent" else "0"
    weight = args.weight if args.weight is not None else extras.get("weight", default)
    bound = args.bound or int(extras.get("bound", 64))
    return cartan.discover_block(pres, Fraction(weight), bound)


def _block_payload(b):
    return {"presentation": b.presentation.describe(), "weight": b.weight, "n": b.size,
            "weights": b.values, "shifts": b.shifts, "complete": b.complete,
            "certificate": b.certificate, "bound": b.bound}


def _resolve_n(args, report):
    pres, extras = _presentation(args)
    if pres is not None and args.n is not None:
        raise UsageError("give either --n or a presentation, not both")
    if pres is None:
        if args.n is None:
            raise UsageError("a block size --n or a presentation (--preset/--config) is required")
        if args.n < 1:
            raise UsageError("--n must be positive")
        return args.n
    b = _discover(args, pres, extras)
    report["block"] = _block_payload(b)
    return b.size


# commands -------------------------------------------------------------------

def cmd_block(args):
    pres, extras = _presentation(args)
    if pres is None:
        raise UsageError("block needs --preset or --config")
    b = _discover(args, pres, extras)
    vs = cartan.verma_series(pres, b.weight, b.bound)
    out = {"block": _block_payload(b), "verma_singular_degrees": vs.degrees, "verma_length": vs.length}
    lines = [b.presentation.describe(), f"weight {b.weight}: block of size {b.size}",
             "weights in block order " + " < ".join(str(v) for v in b.values),
             "shifts " + " ".join(str(s) for s in b.shifts),
             f"singular degrees of the Verma module: {vs.degrees or 'none'}",
             f"complete: {str(b.complete).lower()} ({b.certificate or 'no certificate'})"]
    return out, "\n".join(lines), EXIT_OK


def _ext_value(args, n, x, y, l):
    v = bc.ext_dim(n, x, y, l)
    if v is not bc.UNSUPPORTED:
        return v, "formula"
    if args.oracle:
        return repcat.ext_dim_oracle(n, x, y, l, _field(args, la.QQ)), "oracle"
    return v, "unsupported"


def _tag(src):
    if src == "unsupported":
        return " (not covered by the formula table; rerun with --oracle)"
    return "" if src == "formula" else f" [{src}]"


def cmd_dims(args):
    report = {}
    n = _resolve_n(args, report)
    rows, lines = [], []
    if "block" in report:
        lines.append(f"block size n = {n}")
    for xs, ys, ls in args.ext or []:
        x, y, l = parse(xs, n), parse(ys, n), int(ls)
        v, src = _ext_value(args, n, x, y, l)
        rows.append({"query": "ext", "x": x.label(n), "y": y.label(n), "degree": l, "value": v, "source": src})
        lines.append(f"dim Ext^{l}({x.label(n)}, {y.label(n)}) = {_jsonable(v)}" + _tag(src))
    for xs, ys in args.hom or []:
        x, y = parse(xs, n), parse(ys, n)
        v, src = _ext_value(args, n, x, y, 0)
        rows.append({"query": "hom", "x": x.label(n), "y": y.label(n), "value": v, "source": src})
        lines.append(f"dim Hom({x.label(n)}, {y.label(n)}) = {_jsonable(v)}" + _tag(src))
    for xs in args.mult or []:
        x = parse(xs, n)
        dv = list(dim_vector(n, x))
        rows.append({"query": "mult", "x": x.label(n), "value": dv})
        lines.append(f"[{x.label(n)} : L_i] = {dv}")
    if args.table is not None:
        objs = all_objects(n)
        labels = [o.label(n) for o in objs]
        table = [[_ext_value(args, n, x, y, args.table)[0] for y in objs] for x in objs]
        rows.append({"query": "table", "degree": args.table, "objects": labels, "matrix": table})
        w = max(len(s) for s in labels)
        lines.append(f"dim Ext^{args.table}(row, column)")
        lines.append(" " * w + " " + " ".join(s.rjust(w) for s in labels))
        for lab, row in zip(labels, table):
            cells = ["?" if v is bc.UNSUPPORTED else str(v) for v in row]
            lines.append(lab.rjust(w) + " " + " ".join(c.rjust(w) for c in cells))
    if not rows:
        raise UsageError("dims needs at least one of --ext, --hom, --mult, --table")
    report.update({"n": n, "results": rows})
    return report, "\n".join(lines), EXIT_OK


def _poly_matrix_text(name, mat):
    lines = [f"{name}:"]
    for row in mat:
        lines.append("  [" + ", ".join(e.format("t") for e in row) + "]")
    return lines


def cmd_hilbert(args):
    report = {}
    n = _resolve_n(args, report)
    ha, he = bc.hilbert_alg(n), bc.hilbert_ext(n)
    det = bc.poly_det(he)
    koszul = bc.koszul_check(n)
    report.update({"n": n, "H_A": [[_poly_coeffs(e) for e in row] for row in ha],
                   "H_E": [[_poly_coeffs(e) for e in row] for row in he],
                   "det_H_E": _poly_coeffs(det), "koszul": koszul, "symmetric": bc.is_symmetric(he)})
    lines = _poly_matrix_text("H(A, t)", ha) + _poly_matrix_text("H(E(A), t)", he)
    lines += [f"det H(E(A), t) = {det.format('t')}", f"koszul: {str(koszul).lower()}"]
    return report, "\n".join(lines), EXIT_OK


def cmd_submodules(args):
    report = {}
    n = _resolve_n(args, report)
    if not args.object:
        raise UsageError("submodules needs --object P_r/P_s")
    x = normalize(parse(args.object, n))
    if not isinstance(x, ProjQuot):
        raise UsageError("submodules works on quotients of projectives P_r/P_s (or tilting modules)")
    field = _field(args, la.PrimeField(2))
    rep = repcat.build(n, x, field)
    subs = enumerate_submodules(rep, args.ceiling, args.method)
    entries = []
    for s in subs:
        psi = transfer_psi(rep, s) if any(s) else ()
        entries.append({"psi": list(psi), "dims": list(repcat.sub_dims(s))})
    entries.sort(key=lambda e: (sum(e["dims"]), e["psi"]))
    expected = expected_count(x.j, x.k)
    report.update({"n": n, "object": x.label(n), "field": field.name, "count": len(subs),
                   "expected": expected, "submodules": entries})
    lines = [f"{x.label(n)} over {field.name}: {len(subs)} submodules (closed form {expected})"]
    for e in entries:
        lines.append(f"  psi {tuple(e['psi'])}  dims {tuple(e['dims'])}")
    return report, "\n".join(lines), EXIT_OK


def _psi(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.replace(" ", ",").split(",") if t)


def _infer_n(x):
    x = normalize(x)
    if isinstance(x, Dual):
        return _infer_n(x.inner)
    if isinstance(x, Simple):
        return x.i
    if isinstance(x, VermaQuot):
        return x.r
    if isinstance(x, ProjQuot):
        return max(x.k - 1, 1)
    if isinstance(x, Tilting):
        return x.k
    raise ObjectError(f"cannot size {x!r}")


def _object_for_tableau(args, text):
    if args.n is not None:
        return parse(text, args.n), args.n
    x = parse(text)
    return x, _infer_n(x)


def _map_entry(m, a, b):
    out = {"shift": list(m.shift), "kind": m.kind(a, b)}
    try:
        out["manhattan_degree"] = styt.manhattan_degree(m, a, b)
    except styt.StytError:
        pass  # no single generating cell
    return out


def cmd_tableau(args):
    chosen = [a for a in (args.psi, args.skew, args.object) if a is not None]
    if args.pair:
        chosen.append(args.pair)
    if len(chosen) != 1:
        raise UsageError("give exactly one of --psi, --skew, --object, --pair")
    report = {}
    if args.pair:
        xs, ys = args.pair
        x, n = _object_for_tableau(args, xs)
        y, m = _object_for_tableau(args, ys)
        n = max(n, m)
        x, y = parse(xs, n), parse(ys, n)
        a, b = styt.yt_of_object(n, x), styt.yt_of_object(n, y)
        maps, exts = styt.enumerate_maps(a, b), styt.enumerate_extensions(a, b)
        hom, ext1 = bc.ext_dim(n, x, y, 0), bc.ext_dim(n, x, y, 1)
        report.update({"n": n, "x": x.label(n), "y": y.label(n),
                       "maps": [_map_entry(m, a, b) for m in maps],
                       "extensions": [{"shift": list(p.shift), "union": styt.render(p.union).split("\n")} for p in exts],
                       "formula_hom": hom, "formula_ext1": ext1})
        lines = [styt.render(a), "", styt.render(b), "",
                 f"tableau maps {len(maps)} (formula Hom {_jsonable(hom)})",
                 f"tableau extensions {len(exts)} (formula Ext^1 {_jsonable(ext1)})"]
        return report, "\n".join(lines), EXIT_OK
    if args.psi is not None:
        d = styt.yt_of_psi(_psi(args.psi))
        report["psi"] = list(_psi(args.psi))
    elif args.skew is not None:
        if "/" not in args.skew:
            raise UsageError("--skew expects 'a,b,... / c,d,...'")
        big, small = args.skew.split("/", 1)
        d = styt.skew(_psi(big), _psi(small))
        report["skew"] = [list(_psi(big)), list(_psi(small))]
    else:
        x, n = _object_for_tableau(args, args.object)
        d = styt.yt_of_object(n, x)
        report.update({"object": x.label(n), "n": n})
    if args.transpose:
        d = styt.transpose(d)
    ok, why = styt.validate(d)
    text = styt.render(d)
    report.update({"rows": text.split("\n") if text else [], "valid": ok, "reason": why})
    return report, text, EXIT_OK


def cmd_verify(args):
    field = _field(args, la.QQ)
    checks = verify.run(args.scope, args.n_max, field, args.seed, args.ceiling)
    failed = [c for c in checks if c.status == "fail"]
    report = {"scope": args.scope, "n_max": args.n_max, "seed": args.seed,
              "checks": [c.as_dict(timings=args.timings) for c in checks],
              "passed": sum(c.status == "pass" for c in checks),
              "failed": len(failed), "skipped": sum(c.status == "skip" for c in checks)}
    lines = []
    for c in checks:
        t = f" [{c.seconds:.2f}s]" if args.timings else ""
        lines.append(f"{c.status.upper():4} {c.suite}: {c.name} ({c.detail}){t}")
        for e in c.counterexamples:
            lines.append(f"       counterexample {e}")
    lines.append(f"{report['passed']} passed, {report['failed']} failed, {report['skipped']} skipped")
    return report, "\n".join(lines), EXIT_VERIFY if failed else EXIT_OK


def _field(args, default):
    return la.field_from_name(args.field) if args.field else default


# parser ---------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("common options")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.add_argument("--field", choices=("Q", "F2", "F3", "F5"), default=None,
                   help="coefficient field (default Q, or F2 for submodule enumeration)")
    g.add_argument("--n", type=int, default=None, help="block size")
    g.add_argument("--n-max", type=int, default=None, help="largest block size for verification")
    g.add_argument("--bound", type=int, default=None, help="search bound for block discovery")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--oracle", action="store_true", help="answer unsupported pairs with the module-category oracle")
    g.add_argument("--preset", choices=sorted(cartan.PRESETS), default=None)
    g.add_argument("--config", default=None, help="key=value file with Cartan data")
    g.add_argument("--weight", default=None, help="value of the weight on the generator of H")

    p = _Parser(prog="gwablocks", description="Blocks of category O over triangular generalized Weyl algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("block", parents=[common], help="discover the block of a weight")
    s.set_defaults(func=cmd_block)

    s = sub.add_parser("dims", parents=[common], help="Hom/Ext dimensions and multiplicities")
    s.add_argument("--ext", nargs=3, action="append", metavar=("X", "Y", "L"))
    s.add_argument("--hom", nargs=2, action="append", metavar=("X", "Y"))
    s.add_argument("--mult", action="append", metavar="X")
    s.add_argument("--table", type=int, default=None, metavar="L", help="Ext^L table over all objects")
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("hilbert", parents=[common], help="Hilbert matrices and the Koszul check")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("submodules", parents=[common], help="enumerate submodules of P_r/P_s")
    s.add_argument("--object", default=None)
    s.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    s.add_argument("--method", choices=("tuples", "closure"), default="tuples")
    s.set_defaults(func=cmd_submodules)

    s = sub.add_parser("tableau", parents=[common], help="render tableaux and count tableau maps")
    s.add_argument("--psi", default=None, help="decreasing sequence such as 5,3,2")
    s.add_argument("--skew", default=None, help="'6,4,3,2 / 4,3'")
    s.add_argument("--object", default=None, help="object name such as T3 or F(P1/P3)")
    s.add_argument("--pair", nargs=2, default=None, metavar=("X", "Y"))
    s.add_argument("--transpose", action="store_true")
    s.set_defaults(func=cmd_tableau)

    s = sub.add_parser("verify", parents=[common], help="run the cross-verification suites")
    s.add_argument("--scope", choices=("formulas", "oracle", "styt", "all"), default="all")
    s.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    s.add_argument("--timings", action="store_true", help="include wall-clock times (not reproducible)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text, code = args.func(args)
    except ResourceRefusal as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (UsageError, ObjectError, styt.StytError, cartan.DomainError, cartan.NotAUnitOnBlock,
            ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "report": _jsonable(payload)}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``weakmult {analyze,solve,catalog,verify-paper,oracle}``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .algebra import NotAComplement, algebra_from_dict, algebra_to_dict
from .field import Field, FieldSpecError
from .linalg import Subspace
from .oracle import DEFAULT_MAX_ENUMERATION, EnumerationTooLarge, linear_report, setmap_report
from .report import SOLVERS, analyze, solve


class CLIError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CLIError(f"{path} is not valid JSON: {exc}") from exc


def _field(args, default: str | None = None) -> Field | None:
    text = getattr(args, "field", None) or default
    if text is None:
        return None
    return Field.parse(text, allow_char_2=args.allow_char_2)


def _load(args, field: Field | None = None):
    data = _read_json(args.input)
    field = field or _field(args)
    try:
        return algebra_from_dict(data, field, allow_char_2=args.allow_char_2)
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise CLIError(f"invalid algebra file {args.input}: {exc}") from exc


def _a1(args, A):
    if not getattr(args, "a1", None):
        return None
    data = _read_json(args.a1)
    vectors = data["basis"] if isinstance(data, dict) else data
    try:
        return Subspace([[A.field(Fraction(x)) if isinstance(x, str) and "mod" not in x else A.field(x)
                          for x in v] for v in vectors], A.dim, A.field)
    except (ValueError, TypeError) as exc:
        raise CLIError(f"invalid A1 basis file {args.a1}: {exc}") from exc


def _params(pairs) -> dict:
    out = {}
    for item in pairs or []:
        if "=" not in item:
            raise CLIError(f"--param expects name=value, got {item!r}")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = Fraction(v.strip())
        except ValueError as exc:
            raise CLIError(f"parameter {k} must be an exact number: {v!r}") from exc
    return out


def _print_matrix_rows(rows, indent="    "):
    width = max((len(x) for r in rows for x in r), default=1)
    for r in rows:
        print(indent + " ".join(x.rjust(width) for x in r))


# -- commands --------------------------------------------------------------

def cmd_analyze(args) -> int:
    A = _load(args)
    rep = analyze(A, _a1(args, A))
    if args.json:
        print(_dump(rep))
        return 0
    for line in rep["summary"]:
        print(line)
    print("A0 basis:", rep["nihil_decomposition"]["a0"])
    print("A1 basis:", rep["nihil_decomposition"]["a1"])
    for kind in ("weak", "full"):
        sp = rep["multipliers"][kind]
        name = "LM(A)" if kind == "full" else "LM'(A)"
        print(f"{name} basis ({sp['dimension']}):")
        for M in sp["basis"]:
            _print_matrix_rows(M)
            print()
    return 0


def cmd_solve(args) -> int:
    A = _load(args)
    kinds = list(SOLVERS) if args.kind == "all" else [args.kind]
    rep = solve(A, kinds, _a1(args, A))
    if args.json:
        print(_dump(rep))
        return 0
    for kind, sp in rep["spaces"].items():
        print(f"{kind}: dimension {sp['dimension']}")
        for M in sp["basis"]:
            _print_matrix_rows(M)
            print()
    return 0


def cmd_catalog(args) -> int:
    if args.catalog_cmd == "list":
        rows = [{"name": e.name, "family": e.family, "params": list(e.params)}
                for e in (catalog.entry(n) for n in catalog.names())]
        if args.json:
            print(_dump({"entries": rows}))
        else:
            for r in rows:
                extra = f" ({', '.join(r['params'])})" if r["params"] else ""
                print(f"{r['name']}{extra}")
        return 0

    e = catalog.entry(args.name)
    params = _params(args.param)
    field = _field(args, "rational")
    A = e.build(params, field)
    if args.catalog_cmd == "get":
        text = _dump(algebra_to_dict(A))
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0

    exp = e.expected(params)
    info = {
        "name": catalog.instance_label(e.name, params),
        "family": e.family,
        "algebra": algebra_to_dict(A),
        "expected": {
            "dims": list(exp.dims),
            "weak_pattern": exp.weak_pattern,
            "full_pattern": exp.full_pattern,
            "a0": [[str(x) for x in v] for v in exp.a0],
            "flags": exp.flags,
            "pattern_source": exp.pattern_source,
            "notes": exp.notes,
        },
    }
    if args.json:
        print(_dump(info))
    else:
        print(info["name"], f"(family {e.family})")
        print("table (row i, column j = e_i e_j):")
        for row in A.table():
            print("    " + "  ".join(A.format_element(x).rjust(6) for x in row))
        print("expected dims (LM', LM):", tuple(exp.dims))
        print("LM' pattern:")
        _print_matrix_rows(exp.weak_pattern)
        print("LM pattern:")
        _print_matrix_rows(exp.full_pattern)
        for note in exp.notes:
            print("note:", note)
    return 0


def cmd_verify(args) -> int:
    field = _field(args, "rational")
    if args.entry:
        params = _params(args.param)
        e = catalog.entry(args.entry)
        todo = [(e.name, params)] if params or not e.params else [(e.name, p) for p in e.test_params]
    else:
        todo = catalog.instances()
    reports = [catalog.verify_entry(n, p, field) for n, p in todo]
    ok = all(r.passed for r in reports)
    if args.json:
        print(_dump({"field": str(field), "pass": ok, "entries": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            dims = f"dims {tuple(r.dims)}" if r.dims else "dims ?"
            print(f"{status}  {catalog.instance_label(r.name, r.params):10s} {dims}  expected {r.expected_dims}")
            for what, good, detail in r.checks:
                if not good:
                    print(f"      {what}: {detail}")
        print(f"{sum(r.passed for r in reports)}/{len(reports)} entries pass over {field}")
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    field = Field.prime(args.p, allow_char_2=args.allow_char_2)
    A = _load(args, field)
    if args.setmaps:
        rep = setmap_report(A, args.max_enumeration)
    else:
        rep = linear_report(A, args.max_enumeration)
    if args.json:
        print(_dump(rep))
    else:
        for kind in ("weak", "full"):
            print(f"{kind}: count {rep['count'][kind]}, predicted {rep['predicted'][kind]}")
        print("match" if rep["match"] else "MISMATCH")
    return 0 if rep["match"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weakmult", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--allow-char-2", action="store_true", help="permit the field F_2")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_field(p):
        p.add_argument("--field", help="'rational' or 'fp:<p>' (overrides the file)")
        return p

    p = with_field(sub.add_parser("analyze", parents=[common], help="full report for an algebra file"))
    p.add_argument("input")
    p.add_argument("--a1", help="JSON file with a basis of the complement A1")
    p.set_defaults(func=cmd_analyze)

    p = with_field(sub.add_parser("solve", parents=[common], help="solve for multiplier spaces"))
    p.add_argument("input")
    p.add_argument("--kind", choices=[*SOLVERS, "all"], default="all")
    p.add_argument("--a1", help="JSON file with a basis of the complement A1")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("catalog", help="the built-in 3-dimensional algebras")
    csub = p.add_subparsers(dest="catalog_cmd", required=True)
    q = csub.add_parser("list", parents=[common])
    q.set_defaults(func=cmd_catalog)
    for name in ("show", "get"):
        q = with_field(csub.add_parser(name, parents=[common]))
        q.add_argument("name")
        q.add_argument("--param", action="append", metavar="NAME=VALUE")
        if name == "get":
            q.add_argument("-o", "--output")
        q.set_defaults(func=cmd_catalog)

    p = with_field(sub.add_parser("verify-paper", parents=[common],
                                  help="check every catalog entry against its expected multipliers"))
    p.add_argument("--entry")
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force counts over F_p")
    p.add_argument("input")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--setmaps", action="store_true", help="count arbitrary maps instead of linear ones")
    p.add_argument("--max-enumeration", type=int, default=DEFAULT_MAX_ENUMERATION)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CLIError, FieldSpecError, NotAComplement, EnumerationTooLarge,
            catalog.UnknownEntry, catalog.MissingParameter) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"weakmult: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Exit status: 0 when every requested check passes, 2 when a check fails,
1 on bad input (unreadable or malformed model file, unknown catalog entry).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .catalog import CATALOG, CatalogError
from .exterior import FormError
from .gstruct import StructureError
from .lie import ClosureError
from .modelfile import parse_model
from .parsing import ParseError, parse_rational
from .verifier import SCHEMA, Geometry, identity_residuals, verify_model

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class InputError(Exception):
    pass


def parse_assignments(text: str | None) -> dict[str, Fraction]:
    """``"a=1,b=-1/2"`` -> ``{"a": Fraction(1), "b": Fraction(-1, 2)}``."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        k, eq, v = item.partition("=")
        k = k.strip()
        if not eq or not k:
            raise InputError(f"expected name=value, got {item.strip()!r}")
        try:
            out[k] = parse_rational(v)
        except (ParseError, ValueError) as e:
            raise InputError(f"bad value for {k}: {e}") from e
    return out


def _read_model(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    try:
        return parse_model(text)
    except ParseError as e:
        raise InputError(f"{path}:{e.line}:{e.column}: {e.message}") from e


def _emit(report, as_json: bool, out) -> int:
    out.write((report.to_json() if as_json else report.to_text()) + "\n")
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_verify(args, out) -> int:
    mf = _read_model(args.file)
    points = list(mf.eval_points)
    if args.eval:
        extra = parse_assignments(args.eval)
        unknown = set(extra) - set(mf.params)
        if unknown:
            raise InputError(f"--eval names undeclared parameters: {sorted(unknown)}")
        points = [extra]
    try:
        S = mf.structure()
        report = verify_model(mf.model(), S, mf.connection(), args.connection, points, mf.relations,
                              name=mf.name or args.file)
    except (StructureError, FormError, ValueError) as e:
        raise InputError(str(e)) from e
    return _emit(report, args.json, out)


def cmd_catalog_list(args, out) -> int:
    for name, e in CATALOG.items():
        defaults = ",".join(f"{p}={e.defaults[p]}" for p in e.params)
        out.write(f"{name:10s} {e.description}\n{'':10s} params {defaults}\n")
    return EXIT_OK


def cmd_catalog_run(args, out) -> int:
    entry = CATALOG.get(args.name)
    if entry is None:
        raise InputError(f"unknown catalog entry {args.name!r}; try 'catalog list'")
    values = parse_assignments(args.params)
    try:
        conf = entry.build(values, symbolic=args.symbolic)
    except (CatalogError, StructureError, ValueError) as e:
        raise InputError(str(e)) from e
    report = verify_model(conf.model, conf.structure, conf.instanton, args.connection, (), conf.relations,
                          golden=conf.golden, name=conf.name)
    return _emit(report, args.json, out)


def cmd_identities(args, out) -> int:
    mf = _read_model(args.file)
    try:
        G = Geometry.build(mf.model(), mf.structure())
    except (StructureError, ValueError) as e:
        raise InputError(str(e)) from e
    res = identity_residuals(G)
    ok = not any(res.values())
    if args.json:
        payload = {"schema": SCHEMA, "model": mf.name or args.file, "identities": {k: not v for k, v in res.items()},
                   "residuals": {k: [[list(key), str(val)] for key, val in sorted(v.items())] for k, v in res.items() if v},
                   "passed": ok}
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for k, v in res.items():
            out.write(f"{k:28s} {'zero' if not v else f'NONZERO ({len(v)} components)'}\n")
        out.write(f"RESULT {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hetnil", description="Exact checks of heterotic solutions on nilpotent Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify a model file")
    v.add_argument("file")
    v.add_argument("--eval", metavar="k=v,...", help="evaluation point replacing those in the file")
    v.add_argument("--json", action="store_true")
    v.add_argument("--connection", choices=("plus", "levi-civita"), default="plus")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="built-in examples")
    csub = c.add_subparsers(dest="catalog_command", required=True)
    cl = csub.add_parser("list")
    cl.set_defaults(func=cmd_catalog_list)
    cr = csub.add_parser("run")
    cr.add_argument("name")
    cr.add_argument("--params", metavar="k=v,...")
    cr.add_argument("--symbolic", action="store_true", help="leave unspecified parameters symbolic")
    cr.add_argument("--json", action="store_true")
    cr.add_argument("--connection", choices=("plus", "levi-civita"), default="plus")
    cr.set_defaults(func=cmd_catalog_run)

    i = sub.add_parser("identities", help="torsion-connection identity suite only")
    i.add_argument("file")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_identities)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except (InputError, ClosureError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

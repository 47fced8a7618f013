"""Command-line front end: build and analyze catalog groups, run the table suite, assemble and decompose."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

import numpy as np

from ..analysis.isotropy import isotropy_rotation_check
from ..analysis.planes import plane_system
from ..analysis.report import report
from ..catalog.coxeter import UnknownType
from ..catalog.names import UnknownGroup, catalog_list, lookup
from ..cyclofield import CycloError
from ..matgroup import CapExceeded, MatrixGroup, OrbitOverflow

VERBS = ("build", "info", "verify-tables", "isotropy-check", "plane-system", "assemble", "decompose", "export",
         "catalog-list")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rrgroups", description=__doc__)
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--group", help="catalog name, e.g. 'W+(E8)' or 'SO4(T/T;O/O)'")
    p.add_argument("--file", help="UTF-8 JSON input: a group export or assembly data")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-elements", type=int, default=None, help="element enumeration cap (default 10**7)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tier", choices=("fast", "full"), default="fast")
    return p


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_group(args) -> MatrixGroup:
    if args.group:
        return lookup(args.group)
    if args.file:
        obj = _read_json(args.file)
        if "generators" not in obj:
            raise UsageError(f"{args.file} is not a group export")
        G = MatrixGroup.from_json(obj)
        G.meta.setdefault("expected_order", obj.get("order"))
        return G
    raise UsageError("this verb needs --group or --file")


def _emit(args, payload: dict, text_lines: list[str]):
    if args.format == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _cmd_build(args) -> int:
    G = _load_group(args)
    expected = G.meta.get("expected_order")
    order = G.order()
    ok = expected is None or order == expected
    payload = {"name": G.name, "dim": G.dim, "conductor": G.conductor, "order": order,
               "expected_order": expected, "status": "pass" if ok else "fail"}
    lines = [f"{G.name}: order {order} in dimension {G.dim}"]
    if expected is not None:
        lines.append(f"reference order {expected}: {'match' if ok else 'MISMATCH'}")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_info(args) -> int:
    G = _load_group(args)
    rep = report(G)
    lines = [f"{rep['name']}: order {rep['order']}",
             f"reflections {rep['reflections']}, rotations {rep['rotations']}",
             "rotation orders " + ", ".join(f"{k}: {v}" for k, v in rep["rotation_orders"].items()),
             f"commutant dimension {rep['commutant_dim']}, components {rep['components']}"]
    lines += [f"{k}: {v}" for k, v in rep["checks"].items()]
    _emit(args, rep, lines)
    return EXIT_OK if all(v == "pass" for v in rep["checks"].values()) else EXIT_FAIL


def _cmd_verify(args) -> int:
    from .suite import verify_tables

    suite = verify_tables(args.tier, args.jobs)
    payload = suite.to_json()
    lines = [r.line() for r in suite.results]
    lines.append(f"{payload['passed']}/{payload['total']} checks passed ({args.tier} tier)")
    _emit(args, payload, lines)
    return EXIT_OK if suite.ok else EXIT_FAIL


def _cmd_isotropy(args) -> int:
    G = _load_group(args)
    res = isotropy_rotation_check(G)
    payload = {"name": G.name, "ok": res.ok, "classes": res.classes, "failures": len(res.failures)}
    _emit(args, payload, [f"{G.name}: isotropy check {'passes' if res.ok else 'FAILS'} "
                          f"over {res.classes} conjugacy classes ({len(res.failures)} failures)"])
    return EXIT_OK if res.ok else EXIT_FAIL


def _cmd_planes(args) -> int:
    G = _load_group(args)
    system = plane_system(G)
    payload = {"name": G.name, "planes": len(system), "closed": system.closed}
    _emit(args, payload, [f"{G.name}: {len(system)} planes of involutive rotations, "
                          f"{'closed' if system.closed else 'NOT closed'} under those rotations"])
    return EXIT_OK if system.closed else EXIT_FAIL


def _cmd_assemble(args) -> int:
    from ..assembly import assemble, data_from_json, validate
    from ..analysis.elements import inventory

    if not args.file:
        raise UsageError("assemble needs --file with assembly data")
    try:
        data = data_from_json(_read_json(args.file))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed assembly data: {exc}") from exc
    rep = validate(data)
    if not rep.ok:
        _emit(args, {"validation": rep.to_json()}, [f"invalid: {code}: {msg}" for code, msg in rep.errors])
        return EXIT_FAIL
    G = assemble(data, check=False)
    inv = inventory(G)
    payload = {"validation": rep.to_json(), "order": G.order(), "reflections": len(inv.reflections),
               "rotations": len(inv.rotations), "group": G.to_json()}
    _emit(args, payload, [f"assembled group of order {G.order()} in dimension {G.dim}",
                          f"reflections {len(inv.reflections)}, rotations {len(inv.rotations)}"])
    return EXIT_OK


def _cmd_decompose(args) -> int:
    from ..assembly import decompose

    G = _load_group(args)
    data = decompose(G)
    payload = data.to_json()
    lines = [f"{G.name}: {len(data.triples)} triples"]
    for i, t in enumerate(data.triples):
        comps = ", ".join(c.type_symbol for c in t.components) or "none"
        lines.append(f"  {i}: case ({t.case}) |G|={t.G.order()} |H|={t.H.order()} |F|={t.F.order()} "
                     f"quotient components: {comps}")
    lines.append("classes: " + "; ".join(str([tuple(r) for r in c]) for c in data.classes))
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_export(args) -> int:
    G = _load_group(args)
    obj = G.to_json()
    obj["order"] = G.order()
    print(json.dumps(obj, indent=1))
    return EXIT_OK


def _cmd_catalog(args) -> int:
    rows = catalog_list()
    payload = {"groups": [{"name": n, "order": o} for n, o in rows]}
    _emit(args, payload, [f"{n:28} {o if o is not None else '-'}" for n, o in rows])
    return EXIT_OK


HANDLERS = {
    "build": _cmd_build, "info": _cmd_info, "verify-tables": _cmd_verify, "isotropy-check": _cmd_isotropy,
    "plane-system": _cmd_planes, "assemble": _cmd_assemble, "decompose": _cmd_decompose, "export": _cmd_export,
    "catalog-list": _cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    # the cap travels through the environment so worker processes see it; restore it for in-process callers
    saved = os.environ.get("RRG_MAX_ELEMENTS")
    if args.max_elements is not None:
        os.environ["RRG_MAX_ELEMENTS"] = str(args.max_elements)
    random.seed(args.seed)
    np.random.seed(args.seed)
    try:
        return HANDLERS[args.verb](args)
    except (UsageError, UnknownGroup, UnknownType) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CycloError, CapExceeded, OrbitOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        if saved is None:
            os.environ.pop("RRG_MAX_ELEMENTS", None)
        else:
            os.environ["RRG_MAX_ELEMENTS"] = saved


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands:

* ``dpzoo table verify [--entry ID]`` -- recompute and compare invariants;
* ``dpzoo info ID``                   -- one entry as a JSON record;
* ``dpzoo graph ID [--dot]``          -- computed dual graph (JSON or DOT);
* ``dpzoo enumerate --degree D``      -- Weyl-orbit census of configurations;
* ``dpzoo corollaries``               -- cross-cutting consistency checks;
* ``dpzoo poly-check [ID]``           -- polynomial checks only.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage/data error.
Output is deterministic (stable ordering, no timestamps).  The data
directory can be overridden with --data-dir or the DPZOO_DATA variable.
"""
from __future__ import annotations

import argparse
import json
import sys

from .catalog import (
    CatalogError,
    CheckResult,
    check_corollaries,
    enumerate_and_match,
    load_catalog,
    verify_all,
    verify_entry,
)
from .lattice import blowup_of_p2
from .surface import (
    class_group,
    dual_graph,
    enumerate_configs,
    fano_weil_index,
    is_weakly_minimal,
    lines,
    picard_rank,
    singularity_type,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _print_checks(name: str, checks: list[CheckResult], as_json: bool) -> bool:
    if as_json:
        print(
            json.dumps(
                {
                    "subject": name,
                    "checks": [
                        {"name": c.name, "status": c.status, "detail": c.detail}
                        for c in checks
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        for c in checks:
            mark = {"pass": "ok  ", "fail": "FAIL", "skip": "skip"}[c.status]
            detail = f"  ({c.detail})" if c.detail and c.status == "fail" else ""
            print(f"{mark} {name}.{c.name}{detail}")
    return all(c.ok for c in checks)


def cmd_table_verify(args) -> int:
    cat = load_catalog(args.data_dir)
    if args.entry is not None:
        try:
            entries = [cat.entry(args.entry)]
        except KeyError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
    else:
        entries = cat.entries
    if args.parallel > 1 and args.entry is None:
        reports = verify_all(cat, parallelism=args.parallel)
    else:
        reports = [verify_entry(cat, e) for e in entries]
    ok = True
    passed = 0
    for rep in reports:
        ok &= _print_checks(rep.entry_id, rep.checks, args.json)
        passed += rep.passed
    if not args.json:
        print(f"{passed}/{len(reports)} entries pass")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _entry_record(entry) -> dict:
    cfg = entry.config()
    cg = class_group(cfg)
    return {
        "id": entry.id,
        "degree": entry.degree,
        "rho": picard_rank(cfg),
        "num_lines": len(lines(cfg)),
        "type": singularity_type(cfg).render(),
        "index": fano_weil_index(cfg),
        "weakly_minimal": is_weakly_minimal(cfg),
        "aut0": entry.aut0,
        "blowup_of": list(entry.blowup_of),
        "class_group": {"free_rank": cg.free_rank, "torsion": list(cg.torsion)},
        "lines": [list(e.coords) for e in lines(cfg)],
        "simple_roots": [list(r.coords) for r in cfg.simple_roots],
        "ambient": entry.ambient["name"] if entry.ambient else None,
        "equations": list(entry.equations),
        "notes": list(entry.notes),
    }


def cmd_info(args) -> int:
    cat = load_catalog(args.data_dir)
    try:
        entry = cat.entry(args.entry)
    except KeyError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(_entry_record(entry), sort_keys=True, indent=1))
    return EXIT_OK


def cmd_graph(args) -> int:
    cat = load_catalog(args.data_dir)
    try:
        entry = cat.entry(args.entry)
    except KeyError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    g = dual_graph(entry.config())
    if args.dot:
        print(g.to_dot(entry.id))
    else:
        print(g.to_json())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not 1 <= args.degree <= 9:
        print("degree must be in 1..9", file=sys.stderr)
        return EXIT_USAGE
    if args.degree < 5:
        print(
            f"note: degree {args.degree} has a large root system; "
            "this may take a long time",
            file=sys.stderr,
        )
    lat = blowup_of_p2(9 - args.degree)
    reps = enumerate_configs(lat, lat.rank - 1)
    rows = []
    for cfg in reps:
        rows.append(
            {
                "type": singularity_type(cfg).render(),
                "num_lines": len(lines(cfg)),
                "rho": picard_rank(cfg),
                "index": fano_weil_index(cfg),
                "simple_roots": [list(r.coords) for r in cfg.simple_roots],
            }
        )
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    else:
        for r in rows:
            print(
                f"type {r['type']:8} lines {r['num_lines']:2}  "
                f"rho {r['rho']}  index {r['index']}"
            )
        print(f"{len(rows)} orbit(s)")
    return EXIT_OK


def cmd_corollaries(args) -> int:
    cat = load_catalog(args.data_dir)
    checks = list(check_corollaries(cat))
    for degree in (5, 6, 7):
        sub, _ = enumerate_and_match(cat, degree)
        checks.extend(
            CheckResult(f"degree{degree}_{c.name}", c.status, c.detail) for c in sub
        )
    ok = _print_checks("corollaries", checks, args.json)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_poly_check(args) -> int:
    cat = load_catalog(args.data_dir)
    if args.entry is not None:
        try:
            entries = [cat.entry(args.entry)]
        except KeyError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
    else:
        entries = cat.entries
    ok = True
    for entry in entries:
        rep = verify_entry(cat, entry)
        poly = [
            c
            for c in rep.checks
            if c.name in ("quasi_homogeneous", "lines_vanish", "actions_invariant")
        ]
        ok &= _print_checks(entry.id, poly, args.json)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dpzoo",
        description="exact-arithmetic verifier for the catalog of Du Val "
        "del Pezzo surfaces with infinite automorphism group",
    )
    p.add_argument("--data-dir", default=None, help="override the data directory")
    sub = p.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="operations on the catalog table")
    tsub = table.add_subparsers(dest="table_command", required=True)
    tv = tsub.add_parser("verify", help="recompute and compare all invariants")
    tv.add_argument("--entry", default=None, help="verify a single entry")
    tv.add_argument("--json", action="store_true")
    tv.add_argument("--parallel", type=int, default=1, metavar="N")
    tv.set_defaults(func=cmd_table_verify)

    info = sub.add_parser("info", help="print one entry as JSON")
    info.add_argument("entry")
    info.set_defaults(func=cmd_info)

    graph = sub.add_parser("graph", help="print the computed dual graph")
    graph.add_argument("entry")
    graph.add_argument("--dot", action="store_true", help="DOT output")
    graph.set_defaults(func=cmd_graph)

    enum = sub.add_parser("enumerate", help="Weyl-orbit census for one degree")
    enum.add_argument("--degree", type=int, required=True)
    enum.add_argument("--json", action="store_true")
    enum.set_defaults(func=cmd_enumerate)

    cor = sub.add_parser("corollaries", help="cross-cutting consistency checks")
    cor.add_argument("--json", action="store_true")
    cor.set_defaults(func=cmd_corollaries)

    poly = sub.add_parser("poly-check", help="polynomial checks only")
    poly.add_argument("entry", nargs="?", default=None)
    poly.add_argument("--json", action="store_true")
    poly.set_defaults(func=cmd_poly_check)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CatalogError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

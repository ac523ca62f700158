#!/usr/bin/env python3
"""Build and validate the catalog data files.

Reads the literal source data in `catalog_source.py`, fills in the root
configurations that are not pinned down by an explicit blow-up model
(via a diagram-embedding search over the ambient root system, validated
against every stored invariant including the expected dual graph), and
writes the JSON files consumed by the dpzoo package.

Run from the repository root:

    python scripts/build_catalog_data.py
"""
from __future__ import annotations

import json
import sys
import time
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))
sys.path.insert(0, str(REPO / "scripts"))

import catalog_source as src  # noqa: E402
from dpzoo.lattice import DivisorClass, blowup_of_p2, hirzebruch  # noqa: E402
from dpzoo.rootsys import AdeType, enumerate_roots  # noqa: E402
from dpzoo.surface import (  # noqa: E402
    DualGraph,
    SurfaceConfig,
    dual_graph,
    fano_weil_index,
    graphs_isomorphic,
    is_weakly_minimal,
    lines,
    singularity_type,
)

DATA = REPO / "src" / "dpzoo" / "data"


def build_graph(spec: dict) -> DualGraph:
    circles = spec["circles"].split()
    bullets = spec["bullets"].split()
    labels = circles + bullets
    index = {lab: i for i, lab in enumerate(labels)}
    colors = tuple(
        "circle" if i < len(circles) else "bullet" for i in range(len(labels))
    )
    edges = []
    for token in spec["edges"].split():
        mult = 2 if "=" in token else 1
        a, b = token.split("=" if mult == 2 else "-")
        i, j = index[a], index[b]
        edges.append((min(i, j), max(i, j), mult))
    return DualGraph(colors, tuple(sorted(edges)))


def diagram_of(ade: AdeType) -> tuple[int, list[tuple[int, int]], list[list[int]]]:
    """Node count, edge list and component partition of the Dynkin diagram."""
    edges: list[tuple[int, int]] = []
    comps: list[list[int]] = []
    n = 0
    for kind, rank in ade.components:
        base = n
        nodes = list(range(base, base + rank))
        if kind == "A":
            edges += [(base + i, base + i + 1) for i in range(rank - 1)]
        elif kind == "D":
            edges += [(base + i, base + i + 1) for i in range(rank - 2)]
            edges.append((base + rank - 3, base + rank - 1))
        else:  # E6, E7, E8
            edges += [(base + i, base + i + 1) for i in range(rank - 2)]
            edges.append((base + 2, base + rank - 1))
        comps.append(nodes)
        n += rank
    return n, edges, comps


def search_config(entry: dict, target_graph: DualGraph) -> SurfaceConfig:
    """Embed the type's diagram into the degree's root system.

    The ambient root systems here are irreducible, so every Weyl class of
    configurations contains a representative mapping some diagram node to
    a fixed root; looping over that choice keeps the search small.  A
    complete embedding is accepted only if it reproduces the whole row:
    type, line count, index, weak minimality and the expected dual graph.
    """
    lat = blowup_of_p2(9 - entry["degree"])
    roots = list(enumerate_roots(lat))
    pairs = [
        [lat.pair(a, b) for b in roots] for a in roots
    ]
    n, edges, comps = diagram_of(AdeType.parse(entry["type"]))
    adj = [[0] * n for _ in range(n)]
    for a, b in edges:
        adj[a][b] = adj[b][a] = 1

    def bfs_order(start: int) -> list[int]:
        comp_of = {v: ci for ci, comp in enumerate(comps) for v in comp}
        order = []
        seen = set()

        def walk(s: int):
            queue = [s]
            seen.add(s)
            while queue:
                v = queue.pop(0)
                order.append(v)
                for w in comps[comp_of[v]]:
                    if w not in seen and adj[v][w]:
                        seen.add(w)
                        queue.append(w)

        walk(start)
        for comp in comps:
            for v in comp:
                if v not in seen:
                    walk(v)
        return order

    def validate(cfg: SurfaceConfig) -> bool:
        return (
            singularity_type(cfg).render() == entry["type"]
            and len(lines(cfg)) == entry["num_lines"]
            and fano_weil_index(cfg) == entry["index"]
            and is_weakly_minimal(cfg) == entry["weakly_minimal"]
            and graphs_isomorphic(dual_graph(cfg), target_graph)
        )

    nroots = len(roots)
    ones = [[j for j in range(nroots) if pairs[i][j] == 1] for i in range(nroots)]
    tried: set[frozenset[int]] = set()

    for anchor in range(n):
        order = bfs_order(anchor)
        assigned = [-1] * n  # assigned[k] = root index for diagram node order[k]

        def extend(k: int) -> SurfaceConfig | None:
            if k == n:
                key = frozenset(assigned)
                if key in tried:
                    return None
                tried.add(key)
                cfg = SurfaceConfig(
                    lat,
                    tuple(
                        sorted((roots[i] for i in assigned), key=lambda d: d.coords)
                    ),
                )
                return cfg if validate(cfg) else None
            v = order[k]
            neighbors = [m for m in range(k) if adj[v][order[m]] == 1]
            pool = ones[assigned[neighbors[0]]] if neighbors else range(nroots)
            for ri in pool:
                ok = True
                for m in range(k):
                    rj = assigned[m]
                    if ri == rj or pairs[ri][rj] != adj[v][order[m]]:
                        ok = False
                        break
                if not ok:
                    continue
                assigned[k] = ri
                found = extend(k + 1)
                if found is not None:
                    return found
                assigned[k] = -1
            return None

        # The ambient system is irreducible, so every Weyl class has a
        # representative sending the anchor node to the fixed first root.
        assigned[0] = 0
        found = extend(1)
        if found is not None:
            return found
    raise RuntimeError(f"no configuration found for {entry['id']}")


def resolve_configs(graphs: dict[str, DualGraph]) -> dict[str, dict]:
    by_id = {e["id"]: e for e in src.ENTRIES}
    configs: dict[str, dict] = {}

    def lattice_json(entry):
        spec = src.CONFIGS.get(entry["id"])
        if spec and spec[0] == "hirzebruch":
            return {"kind": "hirzebruch", "m": spec[1]}
        return {"kind": "blowup", "n": 9 - entry["degree"]}

    # Resolve in decreasing degree so blow-down parents come first.
    t0 = time.perf_counter()
    for entry in sorted(src.ENTRIES, key=lambda e: -e["degree"]):
        eid = entry["id"]
        spec = src.CONFIGS.get(eid, ("search",))
        if spec[0] in ("blowup", "hirzebruch"):
            roots = [list(r) for r in spec[2]]
        elif spec[0] == "inherit":
            parent = configs[spec[1]]["roots"]
            roots = [list(r) + [0] for r in parent]
        else:
            cfg = search_config(entry, graphs[eid])
            roots = [list(r.coords) for r in cfg.simple_roots]
        configs[eid] = {"lattice": lattice_json(entry), "roots": roots}

        # Full validation of whatever we settled on.
        lat = (
            blowup_of_p2(configs[eid]["lattice"]["n"])
            if configs[eid]["lattice"]["kind"] == "blowup"
            else hirzebruch(configs[eid]["lattice"]["m"])
        )
        cfg = SurfaceConfig(lat, tuple(DivisorClass(tuple(r)) for r in roots))
        problems = []
        if singularity_type(cfg).render() != entry["type"]:
            problems.append(f"type {singularity_type(cfg).render()}")
        if lat.rank - len(roots) != entry["rho"]:
            problems.append(f"rho {lat.rank - len(roots)}")
        if len(lines(cfg)) != entry["num_lines"]:
            problems.append(f"lines {len(lines(cfg))}")
        if fano_weil_index(cfg) != entry["index"]:
            problems.append(f"index {fano_weil_index(cfg)}")
        if is_weakly_minimal(cfg) != entry["weakly_minimal"]:
            problems.append(f"wm {is_weakly_minimal(cfg)}")
        if not graphs_isomorphic(dual_graph(cfg), graphs[eid]):
            g = dual_graph(cfg)
            problems.append(
                f"graph mismatch: computed {g.to_json()} vs stored "
                f"{graphs[eid].to_json()}"
            )
        if problems:
            raise RuntimeError(f"{eid}: {problems}")
        print(f"  {eid}: ok ({time.perf_counter() - t0:.1f}s)")
    return configs


def main() -> None:
    graphs = {eid: build_graph(spec) for eid, spec in src.GRAPHS.items()}
    print("resolving root configurations ...")
    configs = resolve_configs(graphs)

    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "graphs").mkdir(exist_ok=True)

    records = []
    for entry in src.ENTRIES:
        eid = entry["id"]
        records.append(
            {
                "id": eid,
                "degree": entry["degree"],
                "rho": entry["rho"],
                "num_lines": entry["num_lines"],
                "type": entry["type"],
                "index": entry["index"],
                "aut0": entry["aut0"],
                "blowup_of": entry["blowup_of"],
                "weakly_minimal": entry["weakly_minimal"],
                "ambient": entry["ambient"],
                "params": entry["params"],
                "equations": entry["equations"],
                "config": configs[eid],
                "lines": entry["lines"],
                "actions": entry["actions"],
                "graph_derived": eid in src.DERIVED_GRAPHS,
                "notes": entry.get("notes", []),
            }
        )
    with open(DATA / "entries.json", "w", encoding="utf-8") as fh:
        json.dump(records, fh, indent=1, sort_keys=True)
        fh.write("\n")

    for eid, g in graphs.items():
        with open(DATA / "graphs" / f"{eid}.json", "w", encoding="utf-8") as fh:
            json.dump(g.to_json_dict(), fh, indent=1, sort_keys=True)
            fh.write("\n")

    with open(DATA / "thm36.json", "w", encoding="utf-8") as fh:
        json.dump(src.THM36, fh, indent=1, sort_keys=True)
        fh.write("\n")
    with open(DATA / "prop61.json", "w", encoding="utf-8") as fh:
        json.dump(src.PROP61, fh, indent=1, sort_keys=True)
        fh.write("\n")
    with open(DATA / "corollaries.json", "w", encoding="utf-8") as fh:
        json.dump(src.COROLLARIES, fh, indent=1, sort_keys=True)
        fh.write("\n")
    with open(DATA / "appendixb.json", "w", encoding="utf-8") as fh:
        json.dump(src.APPENDIXB, fh, indent=1, sort_keys=True)
        fh.write("\n")

    print(f"wrote {len(records)} entries to {DATA}")

    # Round-trip: run the shipped verifier over the freshly written data.
    from dpzoo.catalog import check_corollaries, load_catalog, verify_all

    cat = load_catalog(DATA)
    reports = verify_all(cat)
    failures = [r for r in reports if not r.passed]
    for r in failures:
        for c in r.checks:
            if c.status == "fail":
                print(f"FAIL {r.entry_id}.{c.name}: {c.detail}")
    print(f"verify_all: {len(reports) - len(failures)}/{len(reports)} entries pass")
    for c in check_corollaries(cat):
        print(f"  {c.name}: {c.status} {c.detail if c.status == 'fail' else ''}")
    if failures:
        sys.exit(1)


if __name__ == "__main__":
    main()

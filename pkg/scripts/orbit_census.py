#!/usr/bin/env python3
"""Print the Weyl-orbit census of root configurations for small degrees.

For each degree in 5..7 this enumerates, up to the Weyl group of the
blow-up lattice, all valid simple-root configurations and their computed
invariants, and matches them against the catalog rows.  Degree 5 has one
orbit with no catalog row: the smooth quintic surface, whose automorphism
group is finite.

    python scripts/orbit_census.py [degrees...]
"""
from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dpzoo.catalog import default_catalog, enumerate_and_match  # noqa: E402
from dpzoo.lattice import blowup_of_p2  # noqa: E402
from dpzoo.surface import (  # noqa: E402
    class_group,
    enumerate_configs,
    fano_weil_index,
    lines,
    picard_rank,
    singularity_type,
)


def census(degree: int) -> None:
    lat = blowup_of_p2(9 - degree)
    start = time.perf_counter()
    reps = enumerate_configs(lat, lat.rank - 1)
    elapsed = time.perf_counter() - start
    print(f"degree {degree}: {len(reps)} orbit(s) in {elapsed:.2f}s")
    for cfg in reps:
        cg = class_group(cfg)
        tors = "+".join(f"Z/{d}" for d in cg.torsion) or "free"
        print(
            f"  {singularity_type(cfg).render():8} lines {len(lines(cfg)):2}  "
            f"rho {picard_rank(cfg)}  index {fano_weil_index(cfg)}  Cl {tors}"
        )
    if degree in (5, 6, 7):
        checks, listing = enumerate_and_match(default_catalog(), degree)
        matched = sum(1 for row in listing if row["entry"])
        print(f"  matched to catalog rows: {matched}/{len(listing)}")
        for c in checks:
            if c.status != "pass":
                print(f"  !! {c.name}: {c.detail}")


def main() -> None:
    degrees = [int(a) for a in sys.argv[1:]] or [7, 6, 5]
    for degree in degrees:
        census(degree)


if __name__ == "__main__":
    main()

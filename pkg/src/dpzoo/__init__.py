"""dpzoo: an exact-arithmetic catalog of Du Val del Pezzo surfaces with
infinite automorphism group, and the lattice machinery to verify it.

The building blocks:

* ``lattice``   -- Picard lattices of blow-ups of the plane and of
                   Hirzebruch surfaces, with the intersection pairing;
* ``rootsys``   -- enumeration of (-2)- and (-1)-classes by two
                   independent methods, Weyl reflections, ADE recognition;
* ``surface``   -- the combinatorial surface model and its invariants
                   (lines, class group, Fano-Weil index, dual graph, ...);
* ``wpoly``     -- exact weighted polynomials for equation-level checks;
* ``groupdesc`` -- symbolic automorphism-group descriptors;
* ``catalog``   -- the data files and the verification operations;
* ``cli``       -- the ``dpzoo`` command.
"""

from .lattice import DivisorClass, PicLattice, blowup_of_p2, hirzebruch, pair
from .rootsys import (
    AdeType,
    RootSet,
    ade_type,
    enumerate_minus_one_classes,
    enumerate_roots,
    reflect,
)
from .surface import (
    ClassGroup,
    DualGraph,
    SurfaceConfig,
    class_group,
    components,
    conic_bundle_classes,
    dual_graph,
    enumerate_configs,
    fano_weil_index,
    graphs_isomorphic,
    has_conic_bundle,
    is_weakly_minimal,
    lines,
    lines_through_component,
    picard_rank,
    pushforward_self_intersection,
    singularity_type,
)
from .wpoly import (
    GroupActionFamily,
    NotOnSurfaceError,
    WPoly,
    check_invariance,
    is_quasi_homogeneous,
    parse_poly,
    singular_at,
    vanishes_on_parametrized_curve,
)
from .catalog import (
    Catalog,
    check_corollaries,
    default_catalog,
    enumerate_and_match,
    load_catalog,
    verify_all,
    verify_entry,
)

__version__ = "0.1.0"

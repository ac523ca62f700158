"""Combinatorial model of a Du Val del Pezzo surface.

A surface is modelled by its minimal resolution's Picard lattice together
with the classes of the contracted (-2)-curves ("simple roots").  Every
invariant computed here is a function of that data alone: singularity
type, lines, Picard rank, class group, Fano-Weil index, dual graph, weak
minimality, conic-bundle classes and pushforward self-intersections.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _intlinalg
from .lattice import DivisorClass, PicLattice
from .rootsys import (
    AdeType,
    ade_type,
    enumerate_minus_one_classes,
    enumerate_roots,
    reflect,
)


@dataclass(frozen=True)
class SurfaceConfig:
    """Lattice plus simple (-2)-classes; the empty set models a smooth surface."""

    lattice: PicLattice
    simple_roots: tuple[DivisorClass, ...]

    def __post_init__(self):
        object.__setattr__(self, "simple_roots", tuple(self.simple_roots))
        if len(self.simple_roots) > self.lattice.rank - 1:
            raise ValueError("too many simple roots: Picard rank would drop below 1")
        ade_type(self.lattice, list(self.simple_roots))  # validates the configuration

    @property
    def degree(self) -> int:
        return self.lattice.degree


def singularity_type(cfg: SurfaceConfig) -> AdeType:
    return ade_type(cfg.lattice, list(cfg.simple_roots))


def picard_rank(cfg: SurfaceConfig) -> int:
    return cfg.lattice.rank - len(cfg.simple_roots)


@lru_cache(maxsize=None)
def lines(cfg: SurfaceConfig) -> tuple[DivisorClass, ...]:
    """Classes of lines: (-1)-classes pairing >= 0 with every simple root.

    A (-1)-class is the class of an irreducible curve exactly when it meets
    every effective (-2)-curve nonnegatively.  Effective (-2)-curves are the
    positive roots of the configuration, and every positive root is a
    nonnegative integer combination of simple roots, so nonnegativity
    against the simple roots alone suffices.  (The test suite cross-checks
    this reduction against all positive roots on random configurations.)
    """
    lat = cfg.lattice
    return tuple(
        e
        for e in enumerate_minus_one_classes(lat)
        if all(lat.pair(e, r) >= 0 for r in cfg.simple_roots)
    )


def is_weakly_minimal(cfg: SurfaceConfig) -> bool:
    """True when no line avoids the singular locus entirely."""
    lat = cfg.lattice
    return all(
        any(lat.pair(e, r) > 0 for r in cfg.simple_roots) for e in lines(cfg)
    )


@dataclass(frozen=True)
class ClassGroup:
    """Weil class group Pic(resolution) / <simple roots> in Smith normal form.

    ``transform`` is the unimodular row transform and ``diagonal`` the SNF
    diagonal of the root matrix; together they decide membership and
    divisibility questions in the quotient.
    """

    free_rank: int
    torsion: tuple[int, ...]
    transform: tuple[tuple[int, ...], ...]
    diagonal: tuple[int, ...]

    @property
    def torsion_order(self) -> int:
        return math.prod(self.torsion) if self.torsion else 1

    def divisible(self, v: DivisorClass, t: int) -> bool:
        """Is the image of v in the quotient divisible by t?"""
        y = _intlinalg.mat_vec([list(r) for r in self.transform], list(v.coords))
        k = len(self.diagonal)
        for i, yi in enumerate(y):
            if i < k:
                if yi % math.gcd(t, self.diagonal[i]) != 0:
                    return False
            elif yi % t != 0:
                return False
        return True


@lru_cache(maxsize=None)
def class_group(cfg: SurfaceConfig) -> ClassGroup:
    lat = cfg.lattice
    r = lat.rank
    k = len(cfg.simple_roots)
    if k == 0:
        return ClassGroup(r, (), tuple(tuple(row) for row in _intlinalg.identity(r)), ())
    a = [[root.coords[i] for root in cfg.simple_roots] for i in range(r)]
    s, d, _t = _intlinalg.smith_normal_form(a)
    diag = [d[i][i] for i in range(min(r, k))]
    if any(x == 0 for x in diag):
        raise AssertionError("simple roots are not linearly independent")
    torsion = tuple(x for x in diag if x > 1)
    return ClassGroup(r - k, torsion, tuple(tuple(row) for row in s), tuple(diag))


def _divisors(n: int) -> list[int]:
    return [t for t in range(n, 0, -1) if n % t == 0]


def fano_weil_index(cfg: SurfaceConfig) -> int:
    """Largest t with -K divisible by t in the class group; divides the degree."""
    cg = class_group(cfg)
    minus_k = -cfg.lattice.canonical
    for t in _divisors(cfg.degree):
        if cg.divisible(minus_k, t):
            return t
    raise AssertionError("unreachable: t = 1 always divides")


def pushforward_self_intersection(cfg: SurfaceConfig, line: DivisorClass) -> Fraction:
    """Self-intersection on the singular surface of the image of a line.

    Computed as (E + sum a_i R_i)^2 where the rational a_i solve
    (E + sum a_i R_i) . R_j = 0 for every simple root R_j; the correction
    term is orthogonal to the roots, so the value is E.E + sum a_i (R_i.E).
    """
    lat = cfg.lattice
    if line not in lines(cfg):
        raise ValueError("class is not a line of this configuration")
    roots = cfg.simple_roots
    if not roots:
        return Fraction(-1)
    g = [[Fraction(lat.pair(ri, rj)) for rj in roots] for ri in roots]
    rhs = [Fraction(-lat.pair(line, rj)) for rj in roots]
    a = _intlinalg.solve_rational(g, rhs)
    if a is None:
        raise AssertionError("Cartan system of an ADE configuration is nonsingular")
    return Fraction(-1) + sum(
        ai * lat.pair(ri, line) for ai, ri in zip(a, roots)
    )


def components(cfg: SurfaceConfig) -> list[tuple[DivisorClass, ...]]:
    """Connected components of the simple-root configuration."""
    lat = cfg.lattice
    roots = list(cfg.simple_roots)
    seen: set[int] = set()
    out = []
    for i in range(len(roots)):
        if i in seen:
            continue
        comp = [i]
        seen.add(i)
        stack = [i]
        while stack:
            v = stack.pop()
            for w in range(len(roots)):
                if w not in seen and lat.pair(roots[v], roots[w]) == 1:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(tuple(roots[j] for j in sorted(comp)))
    return out


def lines_through_component(
    cfg: SurfaceConfig, component: tuple[DivisorClass, ...]
) -> tuple[DivisorClass, ...]:
    """Lines meeting at least one root of one singular-point component."""
    comp = tuple(sorted(component, key=lambda d: d.coords))
    valid = {tuple(sorted(c, key=lambda d: d.coords)) for c in components(cfg)}
    if comp not in valid:
        raise ValueError("input is not a full connected component of the configuration")
    lat = cfg.lattice
    return tuple(
        e for e in lines(cfg) if any(lat.pair(e, r) > 0 for r in comp)
    )


@lru_cache(maxsize=None)
def _conic_candidates(lat: PicLattice) -> tuple[DivisorClass, ...]:
    from .rootsys import _bounded_classes

    return tuple(_bounded_classes(lat, 0, -2))


def conic_bundle_classes(cfg: SurfaceConfig) -> tuple[DivisorClass, ...]:
    """Classes of conic fibrations on the singular surface.

    A class qualifies when F.F = 0, K.F = -2, F is nef (nonnegative
    against the Mori-cone generators, i.e. the simple roots and the
    lines), and F is orthogonal to every simple root: a fibration factors
    through the contraction exactly when each contracted curve lies in a
    fiber.  Completeness of the candidate enumeration rests on the same
    Cauchy-Schwarz bound as the (-1)-class search (cross-checked in the
    tests by writing each candidate as a sum of two (-1)-classes where
    those exist).
    """
    lat = cfg.lattice
    ls = lines(cfg)
    out = []
    for f in _conic_candidates(lat):
        if all(lat.pair(f, r) == 0 for r in cfg.simple_roots) and all(
            lat.pair(f, e) >= 0 for e in ls
        ):
            out.append(f)
    return tuple(out)


def has_conic_bundle(cfg: SurfaceConfig) -> bool:
    return bool(conic_bundle_classes(cfg))


# ---------------------------------------------------------------------------
# Dual graphs


@dataclass(frozen=True)
class DualGraph:
    """Colored multigraph of negative curves: circles are (-2)-curves,
    bullets are lines; edge multiplicity is the intersection number."""

    colors: tuple[str, ...]  # "circle" | "bullet" per node
    edges: tuple[tuple[int, int, int], ...]  # (i, j, multiplicity), i < j

    def __post_init__(self):
        for i, j, m in self.edges:
            if i == j:
                raise ValueError("dual graphs have no self-loops")
            if m < 1:
                raise ValueError("edge multiplicity must be >= 1")

    @property
    def num_circles(self) -> int:
        return sum(1 for c in self.colors if c == "circle")

    @property
    def num_bullets(self) -> int:
        return sum(1 for c in self.colors if c == "bullet")

    def adjacency(self) -> list[list[int]]:
        n = len(self.colors)
        adj = [[0] * n for _ in range(n)]
        for i, j, m in self.edges:
            adj[i][j] = adj[j][i] = m
        return adj

    def to_json_dict(self) -> dict:
        return {
            "nodes": list(self.colors),
            "edges": [list(e) for e in sorted(self.edges)],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "DualGraph":
        edges = tuple(
            (min(i, j), max(i, j), m) for i, j, m in (tuple(e) for e in data["edges"])
        )
        return DualGraph(tuple(data["nodes"]), tuple(sorted(edges)))

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def to_dot(self, name: str = "dual_graph") -> str:
        lines_ = [f'graph "{name}" {{']
        for i, color in enumerate(self.colors):
            shape = "circle" if color == "circle" else "point"
            lines_.append(f"  n{i} [shape={shape}];")
        for i, j, m in sorted(self.edges):
            lines_.append(f'  n{i} -- n{j} [label="{m}"];')
        lines_.append("}")
        return "\n".join(lines_)


def dual_graph(cfg: SurfaceConfig) -> DualGraph:
    """Dual graph of all negative curves: simple roots first, then lines."""
    lat = cfg.lattice
    nodes = list(cfg.simple_roots) + sorted(lines(cfg), key=lambda d: d.coords)
    colors = tuple(
        "circle" if i < len(cfg.simple_roots) else "bullet"
        for i in range(len(nodes))
    )
    edges = []
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            m = lat.pair(nodes[i], nodes[j])
            if m > 0:
                edges.append((i, j, m))
    return DualGraph(colors, tuple(edges))


def graphs_isomorphic(g1: DualGraph, g2: DualGraph) -> bool:
    """Color- and multiplicity-preserving isomorphism, by backtracking."""
    n = len(g1.colors)
    if n != len(g2.colors):
        return False
    a1, a2 = g1.adjacency(), g2.adjacency()

    def signature(colors, adj, v):
        return (
            colors[v],
            tuple(sorted((m, colors[w]) for w, m in enumerate(adj[v]) if m)),
        )

    sig1 = [signature(g1.colors, a1, v) for v in range(n)]
    sig2 = [signature(g2.colors, a2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False

    order = sorted(range(n), key=lambda v: (sig1[v], v))
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or sig2[w] != sig1[v]:
                continue
            if all(a2[w][mapping[u]] == a1[v][u] for u in mapping):
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# Enumeration of configurations up to Weyl equivalence


def _config_key(roots: frozenset[DivisorClass]) -> tuple:
    return tuple(sorted(r.coords for r in roots))


def _fingerprint(cfg: SurfaceConfig) -> tuple:
    g = dual_graph(cfg)
    sig = sorted(
        (
            g.colors[v],
            tuple(sorted((m, g.colors[w]) for w, m in enumerate(g.adjacency()[v]) if m)),
        )
        for v in range(len(g.colors))
    )
    return (
        singularity_type(cfg).render(),
        len(lines(cfg)),
        class_group(cfg).torsion,
        fano_weil_index(cfg),
        tuple(sig),
    )


def enumerate_configs(lat: PicLattice, max_roots: int) -> list[SurfaceConfig]:
    """One representative per Weyl orbit of valid configurations.

    Valid means: pairwise intersections in {0, 1} and every component a
    Dynkin diagram, with at most ``max_roots`` roots.  Orbits are grouped
    by a cheap invariant fingerprint first; sets sharing a fingerprint are
    then separated exactly by a reflection-closure BFS on configurations.
    Intended for degree >= 5 lattices (the search is exhaustive for any
    degree, but large root systems make the subset stage expensive).

    Validity is lattice-level only: whether a configuration is realized by
    the contracted curves of an actual surface is a separate geometric
    question that this enumeration does not decide, so for small degrees
    the census may include unrealizable configurations.
    """
    all_roots = list(enumerate_roots(lat))
    idx = {r: i for i, r in enumerate(all_roots)}

    valid_sets: list[frozenset[DivisorClass]] = []

    def grow(chosen: list[DivisorClass], start: int) -> None:
        if chosen:
            try:
                ade_type(lat, chosen)
            except Exception:
                pass
            else:
                valid_sets.append(frozenset(chosen))
        if len(chosen) >= max_roots:
            return
        for i in range(start, len(all_roots)):
            cand = all_roots[i]
            if all(lat.pair(cand, c) in (0, 1) for c in chosen):
                chosen.append(cand)
                grow(chosen, i + 1)
                chosen.pop()

    grow([], 0)
    valid_sets.append(frozenset())

    by_fp: dict[tuple, list[frozenset[DivisorClass]]] = {}
    cfg_of: dict[frozenset[DivisorClass], SurfaceConfig] = {}
    for s in valid_sets:
        cfg = SurfaceConfig(lat, tuple(sorted(s, key=lambda d: d.coords)))
        cfg_of[s] = cfg
        by_fp.setdefault(_fingerprint(cfg), []).append(s)

    reps: list[SurfaceConfig] = []
    for fp in sorted(by_fp, key=repr):
        group = set(by_fp[fp])
        while group:
            seed = min(group, key=_config_key)
            orbit = {seed}
            frontier = [seed]
            while frontier:
                nxt = []
                for s in frontier:
                    for r in all_roots:
                        img = frozenset(reflect(r, c, lat) for c in s)
                        if img not in orbit:
                            orbit.add(img)
                            nxt.append(img)
                frontier = nxt
            members = orbit & group
            group -= members
            reps.append(cfg_of[seed])

    reps.sort(key=lambda c: (len(c.simple_roots), _config_key(frozenset(c.simple_roots))))
    return reps

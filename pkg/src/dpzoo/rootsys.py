"""Root and (-1)-class enumeration, Weyl reflections, ADE recognition.

Every enumeration runs two independent methods and insists they agree:

* a bounded brute-force search whose completeness follows from a
  Cauchy-Schwarz bound (derived in `_bounded_classes` below), and
* a reflection-closure BFS starting from a small seed of manifest classes.

The agreement of the two is asserted at every call, so a bug in either
bound or seed cannot slip through silently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .lattice import DivisorClass, PicLattice


class AdeError(ValueError):
    """Base class for invalid root-configuration input."""


class NonSimpleCrossingError(AdeError):
    """Two input roots meet with intersection number outside {0, 1}."""


class NotNegativeDefiniteError(AdeError):
    """The intersection graph of the input is not a disjoint union of
    A/D/E diagrams (for instance it contains a cycle or a degree-4 node)."""


_KIND_ORDER = {"E": 0, "D": 1, "A": 2}


@dataclass(frozen=True)
class AdeType:
    """Multiset of simply-laced Dynkin components, e.g. A3 + 2 A1.

    Components are stored sorted by decreasing rank, then E before D
    before A, which matches the usual typography ("D4+2A1", "2A3+A1").
    """

    components: tuple[tuple[str, int], ...]

    @staticmethod
    def of(*components: tuple[str, int]) -> "AdeType":
        for kind, rank in components:
            if kind not in "ADE" or rank < 1:
                raise ValueError(f"bad component {(kind, rank)}")
            if kind == "D" and rank < 4:
                raise ValueError("D components have rank >= 4")
            if kind == "E" and rank not in (6, 7, 8):
                raise ValueError("E components have rank 6, 7 or 8")
        key = lambda c: (-c[1], _KIND_ORDER[c[0]])
        return AdeType(tuple(sorted(components, key=key)))

    @property
    def is_smooth(self) -> bool:
        return not self.components

    @property
    def total_rank(self) -> int:
        return sum(rank for _, rank in self.components)

    def render(self) -> str:
        if not self.components:
            return "smooth"
        out = []
        i = 0
        comps = self.components
        while i < len(comps):
            j = i
            while j < len(comps) and comps[j] == comps[i]:
                j += 1
            count = j - i
            kind, rank = comps[i]
            out.append((str(count) if count > 1 else "") + f"{kind}{rank}")
            i = j
        return "+".join(out)

    @staticmethod
    def parse(text: str) -> "AdeType":
        text = text.strip()
        if text in ("smooth", ""):
            return AdeType(())
        comps: list[tuple[str, int]] = []
        for piece in text.split("+"):
            piece = piece.strip()
            i = 0
            while i < len(piece) and piece[i].isdigit():
                i += 1
            count = int(piece[:i]) if i else 1
            kind = piece[i]
            rank = int(piece[i + 1 :])
            comps.extend([(kind, rank)] * count)
        return AdeType.of(*comps)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RootSet:
    """The full finite set of (-2)-classes orthogonal to K, sorted."""

    lattice: PicLattice
    roots: tuple[DivisorClass, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def reflect(root: DivisorClass, c: DivisorClass, lat: PicLattice) -> DivisorClass:
    """Weyl reflection of c in the hyperplane of a (-2)-class:
    c |-> c + (c . root) root.  An involution fixing root-orthogonal classes.
    """
    if lat.pair(root, root) != -2:
        raise ValueError("reflections are only defined for (-2)-classes")
    return c + lat.pair(c, root) * root


def _bounded_classes(lat: PicLattice, self_int: int, k_dot: int) -> list[DivisorClass]:
    """All classes D with D.D = self_int and K.D = k_dot, by complete search.

    Blow-up basis (h, e1, ..., en), D = (d0, d1, ..., dn):

        D.D = d0^2 - sum(di^2) = self_int
        K.D = -3 d0 - sum(di)  = k_dot

    so sum(di^2) = d0^2 - self_int =: Q and sum(di) = -3 d0 - k_dot =: L.
    Cauchy-Schwarz gives L^2 <= n Q, which bounds d0 to a finite window;
    the same inequality applied to the not-yet-chosen coordinates prunes
    the recursion, and the last coordinate is forced.  The search is
    therefore exhaustive within a proven bound, not a heuristic.

    Rank <= 2 Hirzebruch lattices are solved in closed form.
    """
    if lat.is_diagonal_blowup:
        n = lat.rank - 1
        out: list[DivisorClass] = []
        for d0 in range(-64, 65):
            q = d0 * d0 - self_int
            l = -3 * d0 - k_dot
            if q < 0 or l * l > n * q:
                continue
            _fill(n, q, l, [d0], out)
        return sorted(out, key=lambda d: d.coords)

    if lat.rank == 2:
        # Gram [[0,1],[1,-m]]: D = (x, y) has D.D = 2xy - m y^2 and the
        # conditions reduce to a quadratic with finitely many roots; a
        # window of +-8 provably contains them all for m in {0, 2} and
        # the small targets used here (|self_int| <= 2, |k_dot| <= 2).
        out = []
        for x in range(-8, 9):
            for y in range(-8, 9):
                d = DivisorClass((x, y))
                if lat.pair(d, d) == self_int and lat.pair(lat.canonical, d) == k_dot:
                    out.append(d)
        return sorted(out, key=lambda d: d.coords)

    raise ValueError("enumeration supports blow-up and Hirzebruch lattices only")


def _fill(n: int, q: int, l: int, prefix: list[int], out: list[DivisorClass]) -> None:
    if n == 0:
        if q == 0 and l == 0:
            out.append(DivisorClass(tuple(prefix)))
        return
    if n == 1:
        if l * l == q:
            out.append(DivisorClass(tuple(prefix + [l])))
        return
    bound = math.isqrt(q)
    for d in range(-bound, bound + 1):
        q2 = q - d * d
        l2 = l - d
        if q2 < 0 or l2 * l2 > (n - 1) * q2:
            continue
        prefix.append(d)
        _fill(n - 1, q2, l2, prefix, out)
        prefix.pop()


def seed_simple_roots(lat: PicLattice) -> list[DivisorClass]:
    """Manifest (-2)-classes generating the full Weyl group of the lattice."""
    if lat.is_diagonal_blowup:
        n = lat.rank - 1
        seeds = []
        for i in range(1, n):
            v = [0] * (n + 1)
            v[i], v[i + 1] = 1, -1
            seeds.append(DivisorClass(tuple(v)))
        if n >= 3:
            v = [1, -1, -1, -1] + [0] * (n - 3)
            seeds.append(DivisorClass(tuple(v)))
        return seeds
    if lat.rank == 2:
        m = -lat.gram[1][1]
        if m == 2:
            return [DivisorClass((0, 1))]
        return [DivisorClass((1, -1))]
    raise ValueError("unsupported lattice")


def _reflection_closure(
    lat: PicLattice, seeds: list[DivisorClass], mirrors: list[DivisorClass]
) -> set[DivisorClass]:
    """Closure of ``seeds`` under the reflections in ``mirrors``."""
    closed: set[DivisorClass] = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for c in frontier:
            for r in mirrors:
                img = reflect(r, c, lat)
                if img not in closed:
                    closed.add(img)
                    nxt.append(img)
        frontier = nxt
    return closed


def _root_closure(lat: PicLattice) -> set[DivisorClass]:
    """All roots via BFS: close the seed set under its own reflections."""
    seeds = seed_simple_roots(lat)
    if not seeds:
        return set()
    closed: set[DivisorClass] = set()
    for s in seeds:
        closed.add(s)
        closed.add(-s)
    changed = True
    while changed:
        changed = False
        current = list(closed)
        for r in current:
            for c in current:
                img = reflect(r, c, lat)
                if img not in closed:
                    closed.add(img)
                    changed = True
    return closed


@lru_cache(maxsize=None)
def enumerate_roots(lat: PicLattice) -> RootSet:
    """The complete set {R : R.R = -2, K.R = 0}, by two independent methods."""
    if lat.degree < 1:
        raise ValueError("lattice degree must be at least 1")
    brute = _bounded_classes(lat, -2, 0)
    bfs = _root_closure(lat)
    if set(brute) != bfs:
        raise AssertionError(
            f"root enumeration mismatch: search found {len(brute)}, "
            f"reflection closure found {len(bfs)}"
        )
    return RootSet(lat, tuple(brute))


def _minus_one_seeds(lat: PicLattice) -> list[DivisorClass]:
    """Manifest (-1)-classes whose Weyl orbit is the full set.

    For a blow-up lattice the seed is {e1} together with {h - e1 - e2} when
    n >= 2: for n >= 3 the orbit of e1 alone is already everything, but for
    n = 2 the class h - e1 - e2 is Weyl-invariant and must be seeded
    separately.
    """
    if lat.is_diagonal_blowup:
        n = lat.rank - 1
        seeds = []
        if n >= 1:
            seeds.append(DivisorClass((0, 1) + (0,) * (n - 1)))
        if n >= 2:
            seeds.append(DivisorClass((1, -1, -1) + (0,) * (n - 2)))
        return seeds
    return []  # Hirzebruch lattices carry no (-1)-classes (parity).


@lru_cache(maxsize=None)
def enumerate_minus_one_classes(lat: PicLattice) -> tuple[DivisorClass, ...]:
    """The complete set {E : E.E = -1, K.E = -1}, by two independent methods."""
    if lat.degree < 1:
        raise ValueError("lattice degree must be at least 1")
    brute = _bounded_classes(lat, -1, -1)
    mirrors = sorted(_root_closure(lat), key=lambda d: d.coords)
    orbit = _reflection_closure(lat, _minus_one_seeds(lat), mirrors)
    if set(brute) != orbit:
        raise AssertionError(
            f"(-1)-class enumeration mismatch: search found {len(brute)}, "
            f"Weyl orbit found {len(orbit)}"
        )
    return tuple(brute)


def ade_type(lat: PicLattice, simple_roots: list[DivisorClass]) -> AdeType:
    """Recognize the ADE type of a configuration of simple roots.

    The roots must satisfy R.R = -2, K.R = 0, pairwise intersection in
    {0, 1}, and the intersection graph must be a disjoint union of A/D/E
    diagrams.  Recognition is by branch-vertex analysis of each component:
    a path is A_n, a single degree-3 vertex with arm lengths (1,1,k) is
    D_{k+3}, and (1,2,2)/(1,2,3)/(1,2,4) are E6/E7/E8.  Anything else
    (cycles, degree >= 4 vertices, affine shapes) is rejected.
    """
    roots = list(simple_roots)
    if len(set(roots)) != len(roots):
        raise AdeError("duplicate simple roots in input")
    k = lat.canonical
    for r in roots:
        if lat.pair(r, r) != -2 or lat.pair(k, r) != 0:
            raise AdeError(f"{r} is not a root (needs R.R=-2 and K.R=0)")
    m = len(roots)
    adj = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            p = lat.pair(roots[i], roots[j])
            if p not in (0, 1):
                raise NonSimpleCrossingError(
                    f"roots {i} and {j} meet with multiplicity {p}, not 0 or 1"
                )
            adj[i][j] = adj[j][i] = p

    seen = [False] * m
    comps: list[tuple[str, int]] = []
    for start in range(m):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop()
            for w in range(m):
                if adj[v][w] and not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(_classify_component(comp, adj))
    return AdeType.of(*comps)


def _classify_component(comp: list[int], adj: list[list[int]]) -> tuple[str, int]:
    n = len(comp)
    degs = {v: sum(adj[v][w] for w in comp) for v in comp}
    edges = sum(degs.values()) // 2
    if edges != n - 1:
        raise NotNegativeDefiniteError("component contains a cycle")
    branch = [v for v in comp if degs[v] >= 3]
    if not branch:
        return ("A", n)
    if len(branch) > 1 or degs[branch[0]] > 3:
        raise NotNegativeDefiniteError("not a simply laced Dynkin diagram")
    center = branch[0]
    arms = []
    for nb in (w for w in comp if adj[center][w]):
        length = 1
        prev, cur = center, nb
        while True:
            nxt = [w for w in comp if adj[cur][w] and w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", arms[2] + 3)
    if arms == [1, 2, 2]:
        return ("E", 6)
    if arms == [1, 2, 3]:
        return ("E", 7)
    if arms == [1, 2, 4]:
        return ("E", 8)
    raise NotNegativeDefiniteError(f"arm lengths {arms} are not a Dynkin shape")

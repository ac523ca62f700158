"""Unimodular lattices modelling the Picard group of a weak del Pezzo surface.

Two families of lattices cover every case that occurs:

* blow-ups of the plane at n points: basis (h, e1, ..., en) with Gram matrix
  diag(1, -1, ..., -1), canonical class (-3, 1, ..., 1);
* Hirzebruch surfaces F_m for m in {0, 2}: basis (fiber, section) with Gram
  matrix [[0, 1], [1, -m]].

Divisor classes are plain integer vectors over the fixed basis; all
arithmetic is exact.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._intlinalg import determinant


@dataclass(frozen=True)
class DivisorClass:
    """Integer vector in a fixed ordered basis of a Picard lattice."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coords))

    def _check(self, other: "DivisorClass") -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError("divisor classes live in lattices of different rank")

    def __len__(self) -> int:
        return len(self.coords)

    def __repr__(self) -> str:
        return f"DivisorClass{self.coords}"


@dataclass(frozen=True)
class PicLattice:
    """Gram matrix plus canonical class of a rank-r unimodular lattice."""

    gram: tuple[tuple[int, ...], ...]
    canonical: DivisorClass

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def degree(self) -> int:
        """Self-intersection of the canonical class."""
        return self.pair(self.canonical, self.canonical)

    def pair(self, a: DivisorClass, b: DivisorClass) -> int:
        """Intersection pairing a^T * gram * b; symmetric and bilinear."""
        if len(a) != self.rank or len(b) != self.rank:
            raise ValueError(
                f"class of length {len(a)}/{len(b)} in a rank-{self.rank} lattice"
            )
        g = self.gram
        return sum(
            a.coords[i] * g[i][j] * b.coords[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if g[i][j]
        )

    def cls(self, *coords: int) -> DivisorClass:
        c = coords[0] if len(coords) == 1 and not isinstance(coords[0], int) else coords
        d = DivisorClass(tuple(c))
        if len(d) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(d)}")
        return d

    @property
    def is_diagonal_blowup(self) -> bool:
        """True for the diag(1, -1, ..., -1) blow-up basis."""
        g = self.gram
        return all(
            g[i][j] == ((1 if i == 0 else -1) if i == j else 0)
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def gram_determinant(self) -> int:
        return determinant([list(row) for row in self.gram])

    def __repr__(self) -> str:
        return f"PicLattice(rank={self.rank}, degree={self.degree})"


def blowup_of_p2(n_points: int) -> PicLattice:
    """Picard lattice of the blow-up of the plane at ``n_points`` points.

    Basis (h, e1, ..., en); degree is 9 - n_points.
    """
    if not 0 <= n_points <= 8:
        raise ValueError(f"number of blown-up points must be in 0..8, got {n_points}")
    rank = n_points + 1
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rank))
        for i in range(rank)
    )
    canonical = DivisorClass((-3,) + (1,) * n_points)
    return PicLattice(gram, canonical)


def hirzebruch(m: int) -> PicLattice:
    """Picard lattice of the Hirzebruch surface F_m, for m in {0, 2}.

    Basis (f, s) with f^2 = 0, f.s = 1, s^2 = -m; canonical class
    -(2+m) f - 2 s, of square 8.  F_1 is covered by blowup_of_p2(1).
    """
    if m not in (0, 2):
        raise ValueError(f"only F_0 and F_2 are supported, got m={m}")
    gram = ((0, 1), (1, -m))
    canonical = DivisorClass((-2 - m, -2))
    return PicLattice(gram, canonical)


def pair(lat: PicLattice, a: DivisorClass, b: DivisorClass) -> int:
    return lat.pair(a, b)

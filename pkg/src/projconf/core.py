"""Exact homogeneous-coordinate primitives for the projective plane and its dual."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from . import kernels as K
from .errors import DegenerateConfiguration, DegenerateJoin, SpaceMismatch, ZeroVector

Coords = tuple[int, int, int]


class Space(enum.Enum):
    """Which plane a coordinate triple lives in."""

    P = "P"
    PSTAR = "P*"

    @property
    def dual(self) -> "Space":
        return Space.PSTAR if self is Space.P else Space.P

    @classmethod
    def parse(cls, text: str) -> "Space":
        return cls(text.strip())


@dataclass(frozen=True, slots=True)
class HomogeneousVector:
    """A point of P, or of P* (a line of P), in canonical integer form."""

    coords: Coords
    space: Space = Space.P

    def __post_init__(self):
        if K.canon(*self.coords) != tuple(self.coords):
            raise ValueError(f"{self.coords} is not canonical; use canonicalize()")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def dualize(self) -> "HomogeneousVector":
        """Same coordinates read in the dual plane."""
        return HomogeneousVector(self.coords, self.space.dual)

    def __repr__(self):
        x, y, z = self.coords
        star = "*" if self.space is Space.PSTAR else ""
        return f"({x}:{y}:{z}){star}"


def canonicalize(coords: Sequence[int | Fraction], space: Space = Space.P) -> HomogeneousVector:
    """Return the canonical representative of the projective class of ``coords``.

    Rationals are cleared of denominators first; the result has coprime
    integer entries with the first nonzero entry positive.
    """
    if len(coords) != 3:
        raise ValueError("expected three coordinates")
    fr = [Fraction(c) for c in coords]
    den = lcm(*(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    c = K.canon(*ints)
    if c is None:
        raise ZeroVector("all coordinates are zero")
    return HomogeneousVector(c, space)


def _same_space(*vs: HomogeneousVector) -> Space:
    s = vs[0].space
    for v in vs[1:]:
        if v.space is not s:
            raise SpaceMismatch(f"mixed spaces: {s.value} and {v.space.value}")
    return s


def join(p: HomogeneousVector, q: HomogeneousVector) -> HomogeneousVector:
    """Line through two points (a point of the dual plane)."""
    s = _same_space(p, q)
    c = K.cross(p.coords, q.coords)
    if c is None:
        raise DegenerateJoin(f"{p} and {q} coincide")
    return HomogeneousVector(c, s.dual)


def meet(l: HomogeneousVector, m: HomogeneousVector) -> HomogeneousVector:
    """Intersection point of two lines; the same cross product as ``join``."""
    return join(l, m)


def incident(p: HomogeneousVector, l: HomogeneousVector) -> bool:
    if p.space is not l.space.dual:
        raise SpaceMismatch("incidence needs one point and one line")
    return K.dot(p.coords, l.coords) == 0


def collinear(p: HomogeneousVector, q: HomogeneousVector, r: HomogeneousVector) -> bool:
    _same_space(p, q, r)
    return K.det3(p.coords, q.coords, r.coords) == 0


def concurrent(l: HomogeneousVector, m: HomogeneousVector, n: HomogeneousVector) -> bool:
    # Same determinant as collinear: lines of P are points of P*.
    return collinear(l, m, n)


def in_general_position(points: Sequence[HomogeneousVector]) -> bool:
    """No three of the given points are collinear."""
    cs = [p.coords for p in points]
    k = len(cs)
    for i in range(k):
        for j in range(i + 1, k):
            for m in range(j + 1, k):
                if K.det3(cs[i], cs[j], cs[m]) == 0:
                    return False
    return True


@dataclass(frozen=True, slots=True)
class ProjectiveMap:
    """Invertible 3x3 integer matrix (row-major, canonical) between two planes."""

    matrix: tuple[int, ...]
    source: Space = Space.P
    target: Space = Space.P

    def __post_init__(self):
        m = tuple(self.matrix)
        if len(m) != 9:
            raise ValueError("matrix must have 9 entries")
        if _canon_entries(m) != m:
            raise ValueError("matrix is not canonical; use ProjectiveMap.from_matrix")
        if det(m) == 0:
            raise DegenerateConfiguration("singular matrix")

    @classmethod
    def from_matrix(cls, matrix, source: Space = Space.P, target: Space = Space.P) -> "ProjectiveMap":
        flat = tuple(int(x) for row in matrix for x in row) if _nested(matrix) else tuple(int(x) for x in matrix)
        return cls(_canon_entries(flat), source, target)

    @classmethod
    def identity(cls, space: Space = Space.P) -> "ProjectiveMap":
        return cls((1, 0, 0, 0, 1, 0, 0, 0, 1), space, space)

    def rows(self) -> list[list[int]]:
        m = self.matrix
        return [list(m[0:3]), list(m[3:6]), list(m[6:9])]

    def inverse(self) -> "ProjectiveMap":
        return ProjectiveMap(_canon_entries(K.adjugate(self.matrix)), self.target, self.source)

    def on_lines(self) -> "ProjectiveMap":
        """Induced map on the dual planes: the adjugate transpose."""
        a = K.adjugate(self.matrix)
        t = (a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8])
        return ProjectiveMap(_canon_entries(t), self.source.dual, self.target.dual)

    def compose(self, other: "ProjectiveMap") -> "ProjectiveMap":
        """``self`` after ``other``."""
        if other.target is not self.source:
            raise SpaceMismatch("maps do not compose")
        return ProjectiveMap(_canon_entries(K.matmul(self.matrix, other.matrix)), other.source, self.target)


def _nested(m) -> bool:
    try:
        return len(m[0]) == 3
    except TypeError:
        return False


def _canon_entries(m: tuple[int, ...]) -> tuple[int, ...]:
    g = gcd(*m)
    if g == 0:
        raise ZeroVector("zero matrix")
    for x in m:
        if x:
            if x < 0:
                g = -g
            break
    return tuple(x // g for x in m)


def det(m: Sequence[int]) -> int:
    return K.det3(m[0:3], m[3:6], m[6:9])


def apply(M: ProjectiveMap, v: HomogeneousVector) -> HomogeneousVector:
    if v.space is not M.source:
        raise SpaceMismatch(f"map acts on {M.source.value}, got {v.space.value}")
    return HomogeneousVector(K.canon(*K.matvec(M.matrix, v.coords)), M.target)


def map_from_four_points(
    a: Sequence[HomogeneousVector], b: Sequence[HomogeneousVector]
) -> ProjectiveMap:
    """The unique projective map sending a[i] to b[i] for i = 0..3."""
    if len(a) != 4 or len(b) != 4:
        raise ValueError("need exactly four source and four target points")
    src = _same_space(*a)
    dst = _same_space(*b)
    m = K.frame_map([p.coords for p in a], [q.coords for q in b])
    if m is None:
        raise DegenerateConfiguration("three of the four points are collinear")
    return ProjectiveMap(_canon_entries(m), src, dst)

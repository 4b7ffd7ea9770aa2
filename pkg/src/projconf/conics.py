"""Conics as symmetric integer matrices: fitting, incidence, duality, tangents."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from . import kernels as K
from .core import HomogeneousVector, Space, canonicalize, det
from .errors import (
    DegenerateConic,
    NotOnConic,
    OddLength,
    SpaceMismatch,
    TooFewVertices,
    Underdetermined,
)
from .polygons import Polygon, dual_polygon


@dataclass(frozen=True)
class Conic:
    """Symmetric matrix S (row-major, canonical) with incidence form v^T S v = 0."""

    matrix: tuple[int, ...]
    space: Space = Space.P

    def __post_init__(self):
        m = self.matrix
        if len(m) != 9 or m[1] != m[3] or m[2] != m[6] or m[5] != m[7]:
            raise ValueError("conic matrix must be symmetric 3x3")
        if _canon9(m) != tuple(m):
            raise ValueError("conic matrix is not canonical")

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], space: Space = Space.P) -> "Conic":
        """From (a, b, c, d, e, f) of a x^2 + b y^2 + c z^2 + d xy + e xz + f yz."""
        a, b, c, d, e, f = coeffs
        return cls(_canon9((2 * a, d, e, d, 2 * b, f, e, f, 2 * c)), space)

    def coefficients(self) -> tuple[int, ...]:
        m = self.matrix
        co = (m[0], m[4], m[8], 2 * m[1], 2 * m[2], 2 * m[5])
        g = gcd(*co)
        if next(x for x in co if x) < 0:
            g = -g
        return tuple(x // g for x in co)

    @property
    def determinant(self) -> int:
        return det(self.matrix)

    @property
    def nondegenerate(self) -> bool:
        return self.determinant != 0

    def value(self, v: Sequence[int]) -> int:
        return K.dot(v, K.matvec(self.matrix, v))


def _canon9(m) -> tuple[int, ...]:
    g = gcd(*m)
    if g == 0:
        raise ValueError("zero conic")
    if next(x for x in m if x) < 0:
        g = -g
    return tuple(x // g for x in m)


def parabola_point(t) -> HomogeneousVector:
    """(t : t^2 : 1) on the parabola y = x^2, i.e. the conic x^2 - yz."""
    return canonicalize((t, t * t, 1))


PARABOLA = Conic.from_coefficients((1, 0, 0, 0, 0, -1))
UNIT_CIRCLE = Conic.from_coefficients((1, 1, -1, 0, 0, 0))


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [r[:] for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _veronese(v) -> list[int]:
    x, y, z = v
    return [x * x, y * y, z * z, x * y, x * z, y * z]


def fit_coefficients(coords: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Null vector of the 5x6 incidence system, via signed 5x5 minors.

    Returns None when the system has rank < 5.
    """
    rows = [_veronese(c) for c in coords]
    out = []
    for j in range(6):
        minor = [r[:j] + r[j + 1:] for r in rows]
        d = _bareiss_det(minor)
        out.append(-d if j % 2 else d)
    if not any(out):
        return None
    return tuple(out)


def conic_through_5(points: Sequence[HomogeneousVector]) -> Conic:
    if len(points) != 5:
        raise ValueError("need exactly five points")
    space = points[0].space
    if any(p.space is not space for p in points):
        raise SpaceMismatch("points must share one space")
    co = fit_coefficients([p.coords for p in points])
    if co is None:
        raise Underdetermined("five points do not determine a unique conic")
    return Conic.from_coefficients(co, space)


def on_conic(p: HomogeneousVector, C: Conic) -> bool:
    if p.space is not C.space:
        raise SpaceMismatch("point and conic live in different planes")
    return C.value(p.coords) == 0


def dual_conic(C: Conic) -> Conic:
    """The conic of tangent lines: adjugate matrix in the dual plane."""
    if not C.nondegenerate:
        raise DegenerateConic("degenerate conic has no dual conic")
    return Conic(_canon9(K.adjugate(C.matrix)), C.space.dual)


def tangent_line(C: Conic, p: HomogeneousVector) -> HomogeneousVector:
    if not C.nondegenerate:
        raise DegenerateConic("tangent lines need a nondegenerate conic")
    if not on_conic(p, C):
        raise NotOnConic(f"{p} is not on the conic")
    return HomogeneousVector(K.canon(*K.matvec(C.matrix, p.coords)), C.space.dual)


def is_inscribed(P: Polygon) -> tuple[bool, Conic | None]:
    """Whether all vertices lie on one nondegenerate conic.

    The conic is fitted through the first five vertices. When every vertex
    lies on it but it is degenerate the result is ``(False, conic)``; when
    some vertex is off it the result is ``(False, None)``.
    """
    if P.n < 5:
        raise TooFewVertices(f"{P.n}-gon: inscription needs at least 5 vertices")
    co = fit_coefficients(P.coords[:5])
    if co is None:
        raise Underdetermined("first five vertices do not determine a conic")
    C = Conic.from_coefficients(co, P.space)
    for c in P.coords[5:]:
        if C.value(c) != 0:
            return False, None
    if not C.nondegenerate:
        return False, C
    return True, C


def is_circumscribed(P: Polygon) -> tuple[bool, Conic | None]:
    """Whether all sides are tangent to one nondegenerate conic.

    The witness lives in the dual plane (it is the conic of the side lines).
    """
    if P.n < 5:
        raise TooFewVertices(f"{P.n}-gon: circumscription needs at least 5 vertices")
    return is_inscribed(dual_polygon(P))


def points_collinear(coords: Sequence[Sequence[int]]) -> bool:
    """All given points lie on a single line (repeats allowed)."""
    base = coords[0]
    line = None
    for c in coords[1:]:
        if line is None:
            line = K.cross(base, c)
        elif K.dot(line, c) != 0:
            return False
    return True


def vertices_on_two_lines(P: Polygon) -> bool:
    """Even-indexed vertices collinear and odd-indexed vertices collinear (0-based)."""
    if P.n % 2:
        raise OddLength(f"{P.n}-gon has no alternating vertex split")
    if P.n < 6:
        raise TooFewVertices("need at least 6 vertices")
    return points_collinear(P.coords[0::2]) and points_collinear(P.coords[1::2])

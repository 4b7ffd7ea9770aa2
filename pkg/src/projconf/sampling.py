"""Seeded exact samplers for hypothesis polygons.

Every sampler takes a ``seed`` that may be an int or a tuple of ints; the
same seed always yields the same polygon. Coordinates are drawn from the
integer box [-bound, bound].
"""
from __future__ import annotations

import hashlib
import random

from . import kernels as K
from .core import Space
from .errors import DegenerateJoin, ProjconfError
from .polygons import Polygon, dual_polygon

DEFAULT_BOUND = 10**6
MAX_ATTEMPTS = 1000


def rng_for(seed) -> random.Random:
    """Independent stream for an int or tuple seed, stable across processes."""
    digest = hashlib.blake2b(repr(seed).encode(), digest_size=16).digest()
    return random.Random(int.from_bytes(digest, "big"))


def parabola_parameters(n: int, rng: random.Random, bound: int, ordered: bool) -> list[int]:
    # rng.sample draws without replacement: the same law as resampling collisions
    ts = rng.sample(range(-bound, bound + 1), n)
    return sorted(ts) if ordered else ts


def sample_inscribed(n: int, seed, bound: int = DEFAULT_BOUND, ordered: bool = True) -> Polygon:
    """n distinct points (t : t^2 : 1) on the parabola x^2 = yz.

    With ``ordered`` the parameters are sorted, giving a convex polygon.
    """
    if n < 5:
        raise ValueError("inscribed samples need n >= 5")
    ts = parabola_parameters(n, rng_for(seed), bound, ordered)
    return Polygon(tuple(K.canon(t, t * t, 1) for t in ts), Space.P)


def sample_circumscribed(n: int, seed, bound: int = DEFAULT_BOUND, ordered: bool = True) -> Polygon:
    """Dual of an inscribed sample, read back as a polygon in P."""
    return dual_polygon(sample_inscribed(n, seed, bound, ordered)).as_space(Space.P)


def sample_general(n: int, seed, bound: int = DEFAULT_BOUND) -> Polygon:
    """n affine integer points with no three collinear."""
    if n < 3:
        raise ValueError("need n >= 3")
    rng = rng_for(seed)
    for _ in range(MAX_ATTEMPTS):
        pts = [K.canon(rng.randint(-bound, bound), rng.randint(-bound, bound), 1) for _ in range(n)]
        if _no_three_collinear(pts):
            return Polygon(tuple(pts), Space.P)
    raise ProjconfError("could not sample a polygon in general position")


def _no_three_collinear(pts) -> bool:
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if K.det3(pts[i], pts[j], pts[k]) == 0:
                    return False
    return True


def sample_two_point_sides(n: int, seed, bound: int = DEFAULT_BOUND) -> Polygon:
    """A 4m-gon whose even sides (0-based) pass through A and odd sides through B.

    Side i joins vertices i and i+1. Vertex i+1 is vertex i plus a random
    multiple of A or B (alternating); the last vertex closes the pattern as
    the meet of its two constrained sides. Intermediate vectors are kept
    unreduced so that every vertex is a fixed polynomial in the draws.
    """
    if n % 4 or n < 4:
        raise ValueError("two-point-sides samples need n = 4m")
    rng = rng_for(seed)
    for _ in range(MAX_ATTEMPTS):
        A = (rng.randint(-bound, bound), rng.randint(-bound, bound), 1)
        B = (rng.randint(-bound, bound), rng.randint(-bound, bound), 1)
        p = (rng.randint(-bound, bound), rng.randint(-bound, bound), 1)
        raw = [p]
        for i in range(n - 2):
            X = A if i % 2 == 0 else B
            s = rng.randint(-bound, bound)
            raw.append(tuple(c + s * x for c, x in zip(raw[-1], X)))
        side_a = _raw_cross(raw[-1], A)
        side_b = _raw_cross(raw[0], B)
        raw.append(_raw_cross(side_a, side_b))
        try:
            P = _checked_two_point(raw, A, B)
        except ProjconfError:
            continue
        if P is not None:
            return P
    raise ProjconfError("could not sample a two-point-sides polygon")


def _raw_cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _checked_two_point(raw, A, B):
    coords = tuple(K.canon(*c) if any(c) else None for c in raw)
    if None in coords or K.is_proportional(A, B):
        return None
    if any(K.is_proportional(c, A) or K.is_proportional(c, B) for c in coords):
        return None
    P = Polygon(coords, Space.P)  # rejects coincident neighbours
    n = len(coords)
    for i in range(n):
        side = K.cross(coords[i], coords[(i + 1) % n])
        if side is None:
            raise DegenerateJoin(index=i)
        if K.dot(side, A if i % 2 == 0 else B) != 0:
            return None
    return P


def sample(hypothesis: str, n: int, seed, bound: int = DEFAULT_BOUND, ordered: bool = True) -> Polygon:
    if hypothesis == "inscribed":
        return sample_inscribed(n, seed, bound, ordered)
    if hypothesis == "circumscribed":
        return sample_circumscribed(n, seed, bound, ordered)
    if hypothesis == "general":
        return sample_general(n, seed, bound)
    if hypothesis == "two-point-sides":
        return sample_two_point_sides(n, seed, bound)
    raise ValueError(f"unknown hypothesis {hypothesis!r}")

"""Polygons in P or P*, diagonal maps T_k and their word compositions.

Conventions (0-based indices throughout):

* vertex i of T_k(P) is the join of p_i and p_{i+k};
* a word is applied rightmost letter first, so ``"212"`` means
  T_2(T_1(T_2(P))).

Under these conventions T_k(T_k(P)) is P shifted by k, and T_{n-k}(P) is
T_k(P) shifted by -k.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from . import kernels as K
from .core import Coords, HomogeneousVector, Space
from .errors import BadDiagonalIndex, DegenerateJoin, UnitNotCoprime


@dataclass(frozen=True)
class Word:
    """A composition of diagonal maps, stored left to right as written."""

    letters: tuple[int, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty word")
        if any(not isinstance(k, int) or k < 1 for k in self.letters):
            raise ValueError(f"letters must be positive integers: {self.letters}")

    @classmethod
    def parse(cls, text: "str | Word | Iterable[int]") -> "Word":
        """Accepts ``"21212"``, ``"3,13,3"`` or an iterable of ints."""
        if isinstance(text, Word):
            return text
        if isinstance(text, str):
            text = text.strip()
            if "," in text:
                return cls(tuple(int(x) for x in text.split(",")))
            return cls(tuple(int(ch) for ch in text))
        return cls(tuple(int(k) for k in text))

    def __str__(self):
        if all(k < 10 for k in self.letters):
            return "".join(map(str, self.letters))
        return ",".join(map(str, self.letters))

    def __len__(self):
        return len(self.letters)

    def is_palindrome(self) -> bool:
        return self.letters == self.letters[::-1]

    def reversed(self) -> "Word":
        return Word(self.letters[::-1])

    def application_order(self) -> tuple[int, ...]:
        return self.letters[::-1]

    def validate(self, n: int) -> None:
        for k in self.letters:
            if not 1 <= k <= n - 1:
                raise BadDiagonalIndex(f"letter {k} invalid for a {n}-gon")


@dataclass(frozen=True)
class Polygon:
    """Cyclically ordered vertices, all in one plane.

    ``coords`` holds canonical integer triples; ``vertices`` wraps them as
    HomogeneousVector objects.
    """

    coords: tuple[Coords, ...]
    space: Space = Space.P

    def __post_init__(self):
        cs = tuple(tuple(c) for c in self.coords)
        object.__setattr__(self, "coords", cs)
        n = len(cs)
        if n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        for c in cs:
            if len(c) != 3 or K.canon(*c) != c:
                raise ValueError(f"vertex {c} is not a canonical triple")
        for i in range(n):
            if cs[i] == cs[(i + 1) % n]:
                raise DegenerateJoin("consecutive vertices coincide", index=i)

    @classmethod
    def from_vectors(cls, vertices: Sequence[HomogeneousVector]) -> "Polygon":
        space = vertices[0].space
        if any(v.space is not space for v in vertices):
            from .errors import SpaceMismatch

            raise SpaceMismatch("polygon vertices must share one space")
        return cls(tuple(v.coords for v in vertices), space)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    @property
    def vertices(self) -> tuple[HomogeneousVector, ...]:
        return tuple(HomogeneousVector(c, self.space) for c in self.coords)

    def vertex(self, i: int) -> HomogeneousVector:
        return HomogeneousVector(self.coords[i % self.n], self.space)

    def shift(self, s: int) -> "Polygon":
        """New vertex i is old vertex i+s."""
        s %= self.n
        return Polygon(self.coords[s:] + self.coords[:s], self.space)

    def shift_to(self, other: "Polygon") -> int | None:
        """Smallest s with self.shift(s) == other, or None."""
        if other.n != self.n or other.space is not self.space:
            return None
        for s in range(self.n):
            if self.coords[s:] + self.coords[:s] == other.coords:
                return s
        return None

    def as_space(self, space: Space) -> "Polygon":
        """Same coordinates reinterpreted in another plane."""
        return Polygon(self.coords, space)


def sides(P: Polygon) -> tuple[HomogeneousVector, ...]:
    """Side i is the line through vertices i and i+1."""
    return diagonal_map(P, 1).vertices


def dual_polygon(P: Polygon) -> Polygon:
    return diagonal_map(P, 1)


def diagonal_map(P: Polygon, k: int) -> Polygon:
    """T_k: the polygon of consecutive k-diagonals, living in the dual plane."""
    if not 1 <= k <= P.n - 1:
        raise BadDiagonalIndex(f"k={k} invalid for a {P.n}-gon")
    return Polygon(K.diagonal_stage(P.coords, k), P.space.dual)


def apply_word(P: Polygon, w: "Word | str") -> Polygon:
    """T_w(P), rightmost letter first.

    A DegenerateJoin carries ``stage`` (0-based, in application order)
    and the offending vertex ``index``.
    """
    w = Word.parse(w)
    w.validate(P.n)
    coords = K.apply_letters(P.coords, w.application_order())
    space = P.space.dual if len(w) % 2 else P.space
    return Polygon(coords, space)


def relabel(P: Polygon, u: int, s: int = 0) -> Polygon:
    """New vertex i is old vertex u*i + s (mod n); u must be a unit mod n."""
    n = P.n
    if gcd(u, n) != 1:
        raise UnitNotCoprime(f"{u} is not invertible mod {n}")
    return Polygon(tuple(P.coords[(u * i + s) % n] for i in range(n)), P.space)


def pentagram_iterate(P: Polygon, m: int) -> Polygon:
    """m applications of the pentagram map T_1 T_2."""
    if m < 0:
        raise ValueError("iteration count must be nonnegative")
    if m == 0:
        return P
    return apply_word(P, Word((1, 2) * m))

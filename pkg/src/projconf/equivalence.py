"""Projective equivalence of labeled polygons, with explicit witness matrices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import kernels as K
from .core import ProjectiveMap, _canon_entries
from .errors import DegenerateConfiguration
from .polygons import Polygon, dual_polygon


@dataclass(frozen=True, order=True)
class Labeling:
    """Dihedral relabeling: vertex i goes to shift + i, or shift - i if reflected."""

    reflect: bool = False
    shift: int = 0

    def __call__(self, i: int, n: int) -> int:
        return (self.shift - i) % n if self.reflect else (self.shift + i) % n

    @property
    def kind(self) -> str:
        if self.reflect:
            return "reflection"
        return "identity" if self.shift == 0 else "shift"

    def inverse(self, n: int) -> "Labeling":
        if self.reflect:
            return self
        return Labeling(False, (-self.shift) % n)

    def index(self, n: int) -> int:
        """Position in the deterministic scan order."""
        return self.shift % n + (n if self.reflect else 0)

    def describe(self) -> str:
        """Human-facing form with 1-based vertex labels."""
        if self.reflect:
            return f"i -> {self.shift + 2}-i"
        return "identity" if self.shift == 0 else f"i -> i+{self.shift}"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "shift": self.shift, "text": self.describe()}

    @classmethod
    def from_dict(cls, d: dict) -> "Labeling":
        return cls(d["kind"] == "reflection", int(d["shift"]))


def dihedral_labelings(n: int) -> Iterator[Labeling]:
    """Identity, shifts ascending, then reflections ascending."""
    for s in range(n):
        yield Labeling(False, s)
    for s in range(n):
        yield Labeling(True, s)


def _frame_window(coords) -> int:
    """First i with vertices i..i+3 in general position."""
    n = len(coords)
    for i in range(n):
        quad = [coords[(i + j) % n] for j in range(4)]
        if (K.det3(quad[0], quad[1], quad[2]) and K.det3(quad[0], quad[1], quad[3])
                and K.det3(quad[0], quad[2], quad[3]) and K.det3(quad[1], quad[2], quad[3])):
            return i
    raise DegenerateConfiguration("no four consecutive vertices in general position")


def _witness(src, dst, start: int, lab: Labeling):
    n = len(src)
    idx = [(start + j) % n for j in range(4)]
    m = K.frame_map([src[i] for i in idx], [dst[lab(i, n)] for i in idx])
    if m is None:
        return None
    if not K.check_labeling(m, src, dst, lab.shift, lab.reflect):
        return None
    return m


def equiv_witness(P: Polygon, Q: Polygon, labeling: Labeling = Labeling()) -> ProjectiveMap | None:
    """Projective map M with M p_i = q_{labeling(i)} for every i, or None."""
    if P.n != Q.n:
        raise ValueError("polygons differ in size")
    if P.n < 4:
        raise ValueError("need at least 4 vertices")
    start = _frame_window(P.coords)
    m = _witness(P.coords, Q.coords, start, labeling)
    if m is None:
        return None
    return ProjectiveMap(_canon_entries(m), P.space, Q.space)


def equivalent_mod_dihedral(P: Polygon, Q: Polygon) -> tuple[Labeling, ProjectiveMap] | None:
    """First labeling in scan order admitting a witness."""
    if P.n != Q.n:
        raise ValueError("polygons differ in size")
    start = _frame_window(P.coords)
    for lab in dihedral_labelings(P.n):
        m = _witness(P.coords, Q.coords, start, lab)
        if m is not None:
            return lab, ProjectiveMap(_canon_entries(m), P.space, Q.space)
    return None


def is_self_dual(P: Polygon) -> bool:
    return equivalent_mod_dihedral(P, dual_polygon(P)) is not None

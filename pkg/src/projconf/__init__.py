"""Exact projective geometry of polygons under diagonal maps.

Homogeneous points and lines with integer coordinates, conics, the
diagonal maps T_k, projective equivalence with explicit witnesses, a
randomized exact verifier for configuration statements and a search over
words in the T_k.
"""
from .conics import Conic, conic_through_5, dual_conic, is_circumscribed, is_inscribed, tangent_line
from .core import HomogeneousVector, ProjectiveMap, Space, join, meet
from .equivalence import Labeling, equiv_witness, equivalent_mod_dihedral
from .kernels import BACKEND
from .polygons import Polygon, Word, apply_word, diagonal_map, dual_polygon, relabel
from .verifier import TheoremStatement, VerificationReport, builtin_suite, check_statement

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Conic", "HomogeneousVector", "Labeling", "Polygon", "ProjectiveMap",
    "Space", "TheoremStatement", "VerificationReport", "Word", "apply_word",
    "builtin_suite", "check_statement", "conic_through_5", "diagonal_map",
    "dual_conic", "dual_polygon", "equiv_witness", "equivalent_mod_dihedral",
    "is_circumscribed", "is_inscribed", "join", "meet", "relabel", "tangent_line",
]

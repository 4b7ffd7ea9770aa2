import pytest
from hypothesis import given, strategies as st

from projconf.conics import parabola_point
from projconf.core import ProjectiveMap, apply
from projconf.equivalence import (
    Labeling,
    dihedral_labelings,
    equiv_witness,
    equivalent_mod_dihedral,
    is_self_dual,
)
from projconf.polygons import Polygon, apply_word, diagonal_map, dual_polygon, relabel
from projconf.sampling import sample_circumscribed, sample_general, sample_inscribed


def test_labeling_basics():
    assert Labeling()(3, 7) == 3
    assert Labeling(False, 2)(6, 7) == 1
    assert Labeling(True, 0)(1, 7) == 6
    assert Labeling(False, 2).inverse(7) == Labeling(False, 5)
    assert Labeling(True, 3).inverse(7) == Labeling(True, 3)
    assert Labeling().describe() == "identity"
    assert Labeling(False, 2).describe() == "i -> i+2"
    assert Labeling(True, 0).describe() == "i -> 2-i"
    assert Labeling.from_dict(Labeling(True, 4).to_dict()) == Labeling(True, 4)


def test_scan_order():
    labs = list(dihedral_labelings(5))
    assert len(labs) == 10
    assert labs[0] == Labeling() and labs[5] == Labeling(True, 0)
    assert [l.index(5) for l in labs] == list(range(10))


def test_identity_witness():
    P = sample_general(7, 1)
    assert equiv_witness(P, P).matrix == ProjectiveMap.identity().matrix


def test_hexagon_theorem_example():
    P = Polygon.from_vectors([parabola_point(t) for t in (0, 1, 3, 4, 6, 10)])
    Q = diagonal_map(P, 2)
    found = equivalent_mod_dihedral(P, Q)
    assert found is not None
    lab, M = found
    # witness is exact on every vertex, not only the frame
    for i in range(6):
        assert apply(M, P.vertex(i)) == Q.vertex(lab(i, 6))


@pytest.mark.parametrize("seed", range(4))
def test_pentagon_self_dual(seed):
    P = sample_general(5, seed)
    assert equivalent_mod_dihedral(P, dual_polygon(P)) is not None
    assert is_self_dual(P)


def test_relabel_found_at_shift():
    P = sample_general(8, 2)
    lab, M = equivalent_mod_dihedral(P, relabel(P, 1, 3))
    assert lab == Labeling(False, 5)  # q_{i+5} = p_{i+8} = p_i
    assert M == ProjectiveMap.identity()
    # the map taking Q back to P uses shift 3
    lab2, _ = equivalent_mod_dihedral(relabel(P, 1, 3), P)
    assert lab2 == Labeling(False, 3)


def test_nonagon_negative():
    P = sample_inscribed(9, 5, 1000, ordered=False)
    assert equivalent_mod_dihedral(P, apply_word(P, "2121212")) is None


def test_circumscribed_nonagon():
    P = sample_circumscribed(9, 5, 1000, ordered=False)
    assert equivalent_mod_dihedral(P, apply_word(P, "313")) is not None


def test_self_dual_remarks():
    assert is_self_dual(diagonal_map(sample_inscribed(7, 2, 1000, ordered=False), 2))
    assert is_self_dual(diagonal_map(sample_circumscribed(9, 2, 1000, ordered=False), 3))
    assert not is_self_dual(sample_general(7, 2))


@given(st.integers(6, 9), st.integers(0, 10**6), st.data())
def test_symmetry(n, seed, data):
    P = sample_inscribed(n, seed, 200, ordered=False)
    Q = apply_word(P, {6: "2", 7: "212", 8: "21212", 9: "1"}[n])
    found = equivalent_mod_dihedral(P, Q)
    if found is None:
        assert n == 9
        return
    lab, M = found
    back = equiv_witness(Q, P, lab.inverse(n))
    assert back is not None
    assert back == M.inverse()


@given(st.integers(0, 10**6))
def test_deterministic(seed):
    P = sample_inscribed(6, seed, 200, ordered=False)
    Q = diagonal_map(P, 2)
    assert equivalent_mod_dihedral(P, Q) == equivalent_mod_dihedral(P, Q)


def test_frame_window_scans_past_collinear_start():
    # first three vertices collinear; later windows are fine
    base = [(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 5, 1), (1, -7, -1), (4, -2, -1)]
    P = Polygon(tuple(base))
    Q = P.shift(2)
    lab, M = equivalent_mod_dihedral(P, Q)
    assert lab == Labeling(False, 4)

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from projconf.core import (
    HomogeneousVector,
    ProjectiveMap,
    Space,
    apply,
    canonicalize,
    collinear,
    concurrent,
    incident,
    join,
    map_from_four_points,
    meet,
)
from projconf.errors import DegenerateConfiguration, DegenerateJoin, SpaceMismatch, ZeroVector

from conftest import ln, pt

ints = st.integers(-50, 50)
triples = st.tuples(ints, ints, ints).filter(any)


def test_canonicalize_examples():
    assert pt(2, 4, 6).coords == (1, 2, 3)
    assert pt(-1, 0, 0).coords == (1, 0, 0)
    assert canonicalize((Fraction(1, 2), Fraction(1, 3), 0)).coords == (3, 2, 0)


def test_canonicalize_zero():
    with pytest.raises(ZeroVector):
        canonicalize((0, 0, 0))


def test_noncanonical_vector_rejected():
    with pytest.raises(ValueError):
        HomogeneousVector((2, 4, 6))


@given(triples, st.integers(-9, 9).filter(bool), st.integers(1, 9))
def test_canonicalize_scale_invariant(v, num, den):
    lam = Fraction(num, den)
    a = canonicalize(v)
    assert canonicalize([lam * x for x in v]) == a
    assert canonicalize(a.coords) == a


def test_join_examples():
    assert join(pt(1, 0, 0), pt(0, 1, 0)) == ln(0, 0, 1)
    assert join(pt(0, 0, 1), pt(1, 1, 1)) == ln(1, -1, 0)
    l = join(pt(1, 1, 1), pt(2, 4, 1))
    assert l == ln(3, -1, -2)
    assert incident(pt(1, 1, 1), l) and incident(pt(2, 4, 1), l)


def test_join_space_tags():
    l = join(pt(1, 0, 0), pt(0, 1, 0))
    assert l.space is Space.PSTAR
    with pytest.raises(SpaceMismatch):
        join(pt(1, 0, 0), ln(0, 1, 0))
    with pytest.raises(DegenerateJoin):
        join(pt(1, 2, 3), pt(2, 4, 6))


def test_meet_examples():
    assert meet(ln(1, 0, 0), ln(0, 1, 0)) == pt(0, 0, 1)
    assert meet(ln(0, 1, 0), ln(0, 1, -1)) == pt(1, 0, 0)
    p = meet(ln(3, -1, -2), ln(1, -1, 0))
    assert incident(p, ln(3, -1, -2)) and incident(p, ln(1, -1, 0))


def test_incidence_examples():
    assert incident(pt(1, 1, 1), ln(3, -1, -2))
    assert collinear(pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1))
    assert not collinear(pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1))


@given(triples, triples, triples)
def test_join_meet_laws(a, b, c):
    p, q, r = pt(*a), pt(*b), pt(*c)
    if p == q:
        return
    l = join(p, q)
    assert l == join(q, p)
    assert incident(p, l) and incident(q, l)
    if not collinear(p, q, r):
        assert meet(join(p, q), join(p, r)) == p


@given(triples, triples, triples)
def test_duality_is_tag_flip(a, b, c):
    p, q, r = pt(*a), pt(*b), pt(*c)
    assert collinear(p, q, r) == concurrent(p.dualize(), q.dualize(), r.dualize())


def test_apply_examples():
    assert apply(ProjectiveMap.identity(), pt(1, 2, 3)) == pt(1, 2, 3)
    D = ProjectiveMap.from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert apply(D, pt(1, 1, 1)) == pt(1, 1, 2)


@given(st.lists(ints, min_size=9, max_size=9), triples, triples)
def test_incidence_preserved_by_maps(m, a, b):
    try:
        M = ProjectiveMap.from_matrix(m)
    except (DegenerateConfiguration, ZeroVector):
        return
    p, l = pt(*a), ln(*b)
    assert incident(p, l) == incident(apply(M, p), apply(M.on_lines(), l))


def test_singular_matrix_rejected():
    with pytest.raises(DegenerateConfiguration):
        ProjectiveMap.from_matrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]])


FRAME = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)]


def test_frame_to_itself_is_identity():
    assert map_from_four_points(FRAME, FRAME) == ProjectiveMap.identity()


def test_frame_to_permuted_frame():
    perm = [FRAME[1], FRAME[2], FRAME[0], FRAME[3]]
    M = map_from_four_points(FRAME, perm)
    assert M.matrix == (0, 0, 1, 1, 0, 0, 0, 1, 0)


def test_parabola_scaling_map():
    from projconf.conics import parabola_point

    src = [parabola_point(t) for t in (0, 1, -1, 2)]
    dst = [parabola_point(2 * t) for t in (0, 1, -1, 2)]
    M = map_from_four_points(src, dst)
    assert M.matrix == (2, 0, 0, 0, 4, 0, 0, 0, 1)
    for s, d in zip(src, dst):
        assert apply(M, s) == d


def test_four_points_degenerate():
    with pytest.raises(DegenerateConfiguration):
        map_from_four_points([pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1), pt(1, 0, 1)], FRAME)


@given(st.lists(triples, min_size=8, max_size=8))
def test_four_point_map_reproduces_targets(cs):
    a = [pt(*c) for c in cs[:4]]
    b = [pt(*c) for c in cs[4:]]
    try:
        M = map_from_four_points(a, b)
    except DegenerateConfiguration:
        return
    assert [apply(M, p) for p in a] == b


def test_inverse_and_compose():
    M = ProjectiveMap.from_matrix([[2, 1, 0], [0, 1, 3], [1, 0, 1]])
    assert M.compose(M.inverse()) == ProjectiveMap.identity()

"""Pure-Python hot kernels.

Vectors are plain ``(x, y, z)`` tuples of Python ints, matrices are
row-major 9-tuples. ``_ckernels.pyx`` mirrors this module function for
function; the test-suite runs both against each other.
"""
from math import gcd

from .errors import DegenerateJoin


def canon(x, y, z):
    """Canonical representative of (x:y:z), or None for the zero vector."""
    g = gcd(x, y, z)
    if g == 0:
        return None
    if x < 0 or (x == 0 and (y < 0 or (y == 0 and z < 0))):
        g = -g
    if g == 1:
        return (x, y, z)
    return (x // g, y // g, z // g)


def cross(a, b):
    """Canonical cross product; None when a and b are proportional."""
    a0, a1, a2 = a
    b0, b1, b2 = b
    return canon(a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)


def is_proportional(a, b):
    a0, a1, a2 = a
    b0, b1, b2 = b
    return a1 * b2 == a2 * b1 and a2 * b0 == a0 * b2 and a0 * b1 == a1 * b0


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def det3(a, b, c):
    a0, a1, a2 = a
    b0, b1, b2 = b
    c0, c1, c2 = c
    return (a0 * (b1 * c2 - b2 * c1)
            - a1 * (b0 * c2 - b2 * c0)
            + a2 * (b0 * c1 - b1 * c0))


def diagonal_stage(verts, k, stage=None):
    """Vertex i of the result is the canonical join of verts[i], verts[i+k]."""
    n = len(verts)
    out = []
    for i in range(n):
        v = cross(verts[i], verts[(i + k) % n])
        if v is None:
            raise DegenerateJoin(index=i, stage=stage)
        out.append(v)
    return tuple(out)


def apply_letters(verts, letters):
    """Apply diagonal stages for ``letters`` in the order given."""
    for stage, k in enumerate(letters):
        verts = diagonal_stage(verts, k, stage)
    return verts


def matvec(m, v):
    x, y, z = v
    return (m[0] * x + m[1] * y + m[2] * z,
            m[3] * x + m[4] * y + m[5] * z,
            m[6] * x + m[7] * y + m[8] * z)


def adjugate(m):
    a, b, c, d, e, f, g, h, i = m
    return (e * i - f * h, c * h - b * i, b * f - c * e,
            f * g - d * i, a * i - c * g, c * d - a * f,
            d * h - e * g, b * g - a * h, a * e - b * d)


def matmul(m, n):
    return tuple(
        m[3 * r] * n[c] + m[3 * r + 1] * n[3 + c] + m[3 * r + 2] * n[6 + c]
        for r in range(3) for c in range(3)
    )


def frame_map(a, b):
    """Integer matrix taking the four points ``a`` to the four points ``b``.

    Returns None unless both quadruples are in general position.
    """
    fa = _frame_scales(a)
    fb = _frame_scales(b)
    if fa is None or fb is None:
        return None
    adj_a, (c1, c2, c3) = fa
    d1, d2, d3 = fb[1]
    b1, b2, b3 = b[0], b[1], b[2]
    s1, s2, s3 = d1 * c2 * c3, d2 * c1 * c3, d3 * c1 * c2
    # columns of B scaled by s, then times adj(A)
    bs = (b1[0] * s1, b2[0] * s2, b3[0] * s3,
          b1[1] * s1, b2[1] * s2, b3[1] * s3,
          b1[2] * s1, b2[2] * s2, b3[2] * s3)
    return matmul(bs, adj_a)


def _frame_scales(pts):
    # c solves [p1 p2 p3] c = det * p4; all c_i nonzero iff no three collinear
    p1, p2, p3, p4 = pts
    cols = (p1[0], p2[0], p3[0], p1[1], p2[1], p3[1], p1[2], p2[2], p3[2])
    if det3(p1, p2, p3) == 0:
        return None
    adj = adjugate(cols)
    c = matvec(adj, p4)
    if c[0] == 0 or c[1] == 0 or c[2] == 0:
        return None
    return adj, c


def check_labeling(m, src, dst, shift, reflect):
    """True iff m maps src[i] onto dst[label(i)] projectively for every i.

    label(i) = shift + i, or shift - i when ``reflect`` (indices mod n).
    """
    n = len(src)
    for i in range(n):
        j = (shift - i) % n if reflect else (shift + i) % n
        if not is_proportional(matvec(m, src[i]), dst[j]):
            return False
    return True

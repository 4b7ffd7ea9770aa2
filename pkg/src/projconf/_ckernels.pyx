# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels, a drop-in mirror of ``_pykernels``.

Python ints are unbounded, so every kernel first tries machine
arithmetic: int64 when all inputs are below 2**31 in magnitude (2x2
minors then fit), __int128 below 2**62, and Python objects beyond that.
"""
from .errors import DegenerateJoin
from . import _pykernels as _py

cdef extern from *:
    """
    typedef __int128 i128;
    """
    ctypedef long long i128

ctypedef long long i64

cdef extern from "Python.h":
    i64 PyLong_AsLongLongAndOverflow(object obj, int *overflow) except? -1

cdef i64 LIM64 = 1LL << 31
cdef i64 LIM128 = 1LL << 62


cdef inline i64 _abs64(i64 x):
    return -x if x < 0 else x


cdef inline i128 _abs128(i128 x):
    return -x if x < 0 else x


cdef inline i64 _gcd64(i64 a, i64 b):
    a = _abs64(a)
    b = _abs64(b)
    while b:
        a, b = b, a % b
    return a


cdef inline i128 _gcd128(i128 a, i128 b):
    cdef i128 t
    a = _abs128(a)
    b = _abs128(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef object _py128(i128 x):
    cdef i128 lim = 1
    lim <<= 62
    if -lim < x < lim:
        return <i64>x
    cdef bint neg = x < 0
    if neg:
        x = -x
    cdef unsigned long long hi = <unsigned long long>(x >> 64)
    cdef unsigned long long lo = <unsigned long long>(x & <i128>0xFFFFFFFFFFFFFFFF)
    v = (int(hi) << 64) | int(lo)
    return -v if neg else v


cdef inline int _tier(object a, object b):
    """0: int64 path, 1: int128 path, 2: Python objects."""
    cdef i64 m = 0, v
    cdef int overflow = 0
    cdef Py_ssize_t i
    for i in range(3):
        v = _abs64(PyLong_AsLongLongAndOverflow(a[i], &overflow))
        if overflow or v < 0:
            return 2
        if v > m:
            m = v
        v = _abs64(PyLong_AsLongLongAndOverflow(b[i], &overflow))
        if overflow or v < 0:
            return 2
        if v > m:
            m = v
    if m < LIM64:
        return 0
    if m < LIM128:
        return 1
    return 2


cdef tuple _canon64(i64 x, i64 y, i64 z):
    cdef i64 g = _gcd64(_gcd64(x, y), z)
    if g == 0:
        return None
    if x < 0 or (x == 0 and (y < 0 or (y == 0 and z < 0))):
        g = -g
    return (x // g, y // g, z // g)


cdef tuple _canon128(i128 x, i128 y, i128 z):
    cdef i128 g = _gcd128(_gcd128(x, y), z)
    if g == 0:
        return None
    if x < 0 or (x == 0 and (y < 0 or (y == 0 and z < 0))):
        g = -g
    return (_py128(x / g), _py128(y / g), _py128(z / g))


def canon(x, y, z):
    """Canonical representative of (x:y:z), or None for the zero vector."""
    try:
        return _canon64(x, y, z)
    except OverflowError:
        return _py.canon(x, y, z)


cdef tuple _cross(object a, object b):
    cdef i64 a0, a1, a2, b0, b1, b2
    cdef i128 A0, A1, A2, B0, B1, B2
    cdef int tier = _tier(a, b)
    if tier == 0:
        a0, a1, a2 = a
        b0, b1, b2 = b
        return _canon64(a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)
    if tier == 1:
        a0, a1, a2 = a
        b0, b1, b2 = b
        A0, A1, A2 = a0, a1, a2
        B0, B1, B2 = b0, b1, b2
        return _canon128(A1 * B2 - A2 * B1, A2 * B0 - A0 * B2, A0 * B1 - A1 * B0)
    return _py.cross(a, b)


def cross(a, b):
    """Canonical cross product; None when a and b are proportional."""
    return _cross(a, b)


cdef bint _proportional(object a, object b):
    cdef i64 a0, a1, a2, b0, b1, b2
    cdef i128 A0, A1, A2, B0, B1, B2
    cdef int tier = _tier(a, b)
    if tier == 0:
        a0, a1, a2 = a
        b0, b1, b2 = b
        return a1 * b2 == a2 * b1 and a2 * b0 == a0 * b2 and a0 * b1 == a1 * b0
    if tier == 1:
        a0, a1, a2 = a
        b0, b1, b2 = b
        A0, A1, A2 = a0, a1, a2
        B0, B1, B2 = b0, b1, b2
        return A1 * B2 == A2 * B1 and A2 * B0 == A0 * B2 and A0 * B1 == A1 * B0
    return _py.is_proportional(a, b)


def is_proportional(a, b):
    return _proportional(a, b)


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def det3(a, b, c):
    return _py.det3(a, b, c)


def diagonal_stage(verts, Py_ssize_t k, stage=None):
    """Vertex i of the result is the canonical join of verts[i], verts[i+k]."""
    cdef Py_ssize_t n = len(verts), i
    cdef list out = []
    for i in range(n):
        v = _cross(verts[i], verts[(i + k) % n])
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
    return _py.matvec(m, v)


def adjugate(m):
    return _py.adjugate(m)


def matmul(m, n):
    return _py.matmul(m, n)


def frame_map(a, b):
    """Integer matrix taking the four points ``a`` to the four points ``b``."""
    return _py.frame_map(a, b)


def check_labeling(m, src, dst, Py_ssize_t shift, bint reflect):
    """True iff m maps src[i] onto dst[label(i)] projectively for every i."""
    cdef Py_ssize_t n = len(src), i, j
    for i in range(n):
        j = (shift - i) % n if reflect else (shift + i) % n
        if j < 0:
            j += n
        if not _proportional(_py.matvec(m, src[i]), dst[j]):
            return False
    return True

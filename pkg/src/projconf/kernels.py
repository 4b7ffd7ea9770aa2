"""Backend selection for the hot kernels.

The compiled extension ``_ckernels`` is used when it was built and
``PROJCONF_PURE_PYTHON`` is unset; otherwise the pure-Python module is
loaded. Both expose the same functions with identical results.
"""
import os

if os.environ.get("PROJCONF_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND = "cython" if _impl.__name__.endswith("_ckernels") else "python"

canon = _impl.canon
cross = _impl.cross
is_proportional = _impl.is_proportional
dot = _impl.dot
det3 = _impl.det3
diagonal_stage = _impl.diagonal_stage
apply_letters = _impl.apply_letters
matvec = _impl.matvec
adjugate = _impl.adjugate
matmul = _impl.matmul
frame_map = _impl.frame_map
check_labeling = _impl.check_labeling

__all__ = [
    "BACKEND", "canon", "cross", "is_proportional", "dot", "det3",
    "diagonal_stage", "apply_letters", "matvec", "adjugate", "matmul",
    "frame_map", "check_labeling",
]

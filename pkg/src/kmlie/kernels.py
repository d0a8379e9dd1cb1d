"""Backend selection for the integer kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` take over.  :func:`use_backend` switches at run
time (tests exercise both).
"""
from __future__ import annotations

from array import array
from contextlib import contextmanager
from functools import lru_cache
from typing import Sequence

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

NOT_ROOT = _pykernels.NOT_ROOT
REAL = _pykernels.REAL
CHAMBER = _pykernels.CHAMBER

_INT64_SAFE = 1 << 40

_backend = "cython" if _ckernels is not None else "python"


def available_backends():
    return ["python"] + (["cython"] if _ckernels is not None else [])


def backend() -> str:
    return _backend


def use_backend(name: str) -> None:
    global _backend
    if name not in available_backends():
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    _backend = name


@contextmanager
def backend_as(name: str):
    prev = _backend
    use_backend(name)
    try:
        yield
    finally:
        use_backend(prev)


def _fits(values) -> bool:
    return all(-_INT64_SAFE < x < _INT64_SAFE for x in values)


@lru_cache(maxsize=64)
def _int64_matrix(a_flat: tuple) -> array:
    return array("q", a_flat)


def descend(a_flat: Sequence[int], n: int, v: Sequence[int]):
    """See :func:`kmlie._pykernels.descend`."""
    if _backend == "cython" and _fits(v):
        return _ckernels.descend(_int64_matrix(tuple(a_flat)), n, array("q", v))
    return _pykernels.descend(a_flat, n, v)


def jacobi_failures(ptr, idx, val, dim: int, triples: Sequence[int]):
    """See :func:`kmlie._pykernels.jacobi_failures`."""
    if _backend == "cython":
        return _ckernels.jacobi_failures(array("q", ptr), array("q", idx),
                                         array("q", val), dim, array("q", triples))
    return _pykernels.jacobi_failures(ptr, idx, val, dim, triples)

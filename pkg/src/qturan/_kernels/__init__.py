"""Kernel backend selection.

The compiled Cython core (``_speed``) is preferred when it imported cleanly
and the graph fits in 64-bit masks; otherwise the pure-Python implementation
is used. ``QTURAN_PURE=1`` forces the pure backend. Both backends implement
the same algorithms with the same tie-breaking and must agree bit-for-bit.
"""

from __future__ import annotations

import importlib
import os

from . import pure

_speed = None
if not os.environ.get("QTURAN_PURE"):
    try:
        _speed = importlib.import_module("qturan._kernels._speed")
    except ImportError:
        _speed = None

BACKEND = "cython" if _speed is not None else "pure"
_SPEED_CAP = 64


def canonical_labeling(n, rows):
    if _speed is not None and n <= _SPEED_CAP:
        return _speed.canonical_labeling(n, rows)
    return pure.canonical_labeling(n, rows)


def canonical_form(n, rows):
    return canonical_labeling(n, rows)[1]


def find_clique(n, rows, k):
    if _speed is not None and n <= _SPEED_CAP:
        return _speed.find_clique(n, rows, k)
    return pure.find_clique(n, rows, k)


def find_embedding(fn, f_rows, gn, g_rows):
    if _speed is not None and fn <= _SPEED_CAP and gn <= _SPEED_CAP:
        return _speed.find_embedding(fn, f_rows, gn, g_rows)
    return pure.find_embedding(fn, f_rows, gn, g_rows)

"""Demazure atoms and key polynomials, backed by the C++ core."""

try:
    from ._demazure import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _demazure import *  # noqa: F401,F403  (build-tree layout)

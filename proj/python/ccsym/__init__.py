"""Exact Contou-Carrere symbols, Witt vectors and reciprocity laws on P^1."""

try:
    from ._ccsym import *  # noqa: F401,F403  (installed layout)
    from ._ccsym import __doc__ as _doc
except ImportError:  # pragma: no cover - build-tree layout
    from _ccsym import *  # noqa: F401,F403
    from _ccsym import __doc__ as _doc

__doc__ = _doc

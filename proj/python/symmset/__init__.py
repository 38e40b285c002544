"""Finite symmetric simplicial sets at desk scale.

EZ-decompositions, skeleta, cycle filling, reduction graphs and
propagative-graph analysis, with brute-force oracles alongside the
constructive algorithms.
"""

from symmset._core import *  # noqa: F401,F403
from symmset._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = __doc__ if __doc__ else _core_doc

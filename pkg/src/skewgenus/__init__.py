"""Exact combinatorics of fixed-height skew shapes and threshold-genus bounds.

Displacement operators, 1- and 2-links, chain thresholds, Komeda-backed
semigroup shapes and replayable upper-bound certificates for ``tg(a x b)``.
"""

from .core import *  # noqa: F401,F403
from .displacement import *  # noqa: F401,F403
from .elliptic import *  # noqa: F401,F403
from .semigroups import *  # noqa: F401,F403
from .chain import *  # noqa: F401,F403
from .certificates import *  # noqa: F401,F403
from .difficulty import *  # noqa: F401,F403
from .bounds import *  # noqa: F401,F403
from . import bounds, certificates, chain, core, difficulty, displacement, elliptic, semigroups

__version__ = "0.1.0"

__all__ = [
    name
    for mod in (core, displacement, elliptic, semigroups, chain, certificates, difficulty, bounds)
    for name in mod.__all__
]

"""The genus-1 model: the unique series with ramification ``-gamma``/``gamma``.

On a twice-marked elliptic curve with ``p - q`` of order ``m`` (0 for
nontorsion), the line bundles of degree ``r + 1`` correspond to progressions
of modulus ``m``; the series attached to ``gamma`` has ramification
``-disp_down(gamma)`` at ``p`` and ``disp_up(gamma)`` at ``q``.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .core import RamificationSequence, SkewShape, make_ram_seq
from .displacement import ArithmeticProgression, disp_down, disp_up, is_linked_by

__all__ = ["EllipticStatus", "elliptic_markings", "elliptic_status"]


class EllipticStatus(enum.Enum):
    EMPTY = "empty"
    UNIQUE_POINT = "unique-point"
    ONE_DIMENSIONAL = "one-dimensional"


def elliptic_markings(
    gamma: Iterable[int], lam: ArithmeticProgression
) -> tuple[RamificationSequence, RamificationSequence]:
    """Return ``(p_ram, q_ram)`` for the series attached to ``gamma`` and ``lam``."""
    g = make_ram_seq(gamma)
    return disp_down(g, lam).complement(0), disp_up(g, lam)


def elliptic_status(s: SkewShape, m: int) -> EllipticStatus:
    """Shape of the space of series of type ``s`` on a curve with torsion order ``m``."""
    if m == 1 or m < 0:
        raise ValueError(f"torsion order must be 0 or >= 2, got {m}")
    alpha, beta = s.lower, s.upper
    if alpha == beta:
        return EllipticStatus.ONE_DIMENSIONAL
    i = next(i for i in range(len(alpha)) if alpha[i] < beta[i])
    v = alpha[i] + i + 1
    if m == 0:
        lam = ArithmeticProgression.singleton(v)
    else:
        lam = ArithmeticProgression.residue(v, m)
    if is_linked_by(alpha, beta, lam):
        return EllipticStatus.UNIQUE_POINT
    return EllipticStatus.EMPTY

"""Arithmetic progressions, displacement operators, loose sets and links.

Progressions here are the restricted kind: empty, a single integer, or a
residue class ``o + mZ`` with ``m >= 2``.  All of ``Z`` (modulus 1) is never
a progression.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

from .core import RamificationSequence, SkewShape, make_ram_seq, skew_size

__all__ = [
    "ArithmeticProgression",
    "LinkKind",
    "LinkVerdict",
    "disp_up",
    "disp_down",
    "loose_set",
    "minimal_progression",
    "classify_link",
    "is_linked_by",
    "is_threshold_genus_one",
    "parse_progression",
]


@dataclass(frozen=True)
class ArithmeticProgression:
    """``modulus`` is ``None`` for the empty set, 0 for a singleton ``{offset}``.

    Residue classes keep ``offset`` reduced into ``[0, modulus)`` so that equal
    sets compare equal.
    """

    modulus: Optional[int]
    offset: int = 0

    def __post_init__(self) -> None:
        m = self.modulus
        if m is None:
            object.__setattr__(self, "offset", 0)
        elif m == 1 or m < 0:
            raise ValueError(f"modulus must be 0 or >= 2, got {m}")
        elif m >= 2:
            object.__setattr__(self, "offset", self.offset % m)

    @classmethod
    def empty(cls) -> ArithmeticProgression:
        return cls(None)

    @classmethod
    def singleton(cls, n: int) -> ArithmeticProgression:
        return cls(0, n)

    @classmethod
    def residue(cls, offset: int, modulus: int) -> ArithmeticProgression:
        if modulus < 2:
            raise ValueError(f"residue class modulus must be >= 2, got {modulus}")
        return cls(modulus, offset)

    @property
    def is_empty(self) -> bool:
        return self.modulus is None

    def __contains__(self, n: int) -> bool:
        m = self.modulus
        if m is None:
            return False
        if m == 0:
            return n == self.offset
        return (n - self.offset) % m == 0

    def shifted(self, n: int) -> ArithmeticProgression:
        if self.modulus is None:
            return self
        return ArithmeticProgression(self.modulus, self.offset + n)

    def negated(self, n: int = 0) -> ArithmeticProgression:
        """The progression ``{n - x : x in self}``."""
        if self.modulus is None:
            return self
        return ArithmeticProgression(self.modulus, n - self.offset)

    def __str__(self) -> str:
        if self.modulus is None:
            return "empty"
        if self.modulus == 0:
            return "{%d}" % self.offset
        if self.offset == 0:
            return f"{self.modulus}Z"
        return f"{self.offset}+{self.modulus}Z"


_RESIDUE = re.compile(r"^(?:(-?\d+)\s*\+\s*)?(\d+)\s*Z$")
_SINGLETON = re.compile(r"^\{\s*(-?\d+)\s*\}$")


def parse_progression(text: str) -> ArithmeticProgression:
    """Parse ``"empty"``, ``"{n}"``, ``"o+mZ"`` or ``"mZ"``."""
    s = text.strip()
    if s.lower() in ("empty", "{}"):
        return ArithmeticProgression.empty()
    m = _SINGLETON.match(s)
    if m:
        return ArithmeticProgression.singleton(int(m.group(1)))
    m = _RESIDUE.match(s)
    if m:
        return ArithmeticProgression.residue(int(m.group(1) or 0), int(m.group(2)))
    raise ValueError(f"bad progression literal {text!r}")


class LinkKind(enum.Enum):
    NOT_A_LINK = "not-a-link"
    ONE_LINK = "1-link"
    TWO_LINK = "2-link"


@dataclass(frozen=True)
class LinkVerdict:
    kind: LinkKind
    progression: Optional[ArithmeticProgression] = None

    @property
    def is_link(self) -> bool:
        return self.kind is not LinkKind.NOT_A_LINK

    def __str__(self) -> str:
        if self.progression is None:
            return self.kind.value
        return f"{self.kind.value} ({self.progression})"


NOT_A_LINK = LinkVerdict(LinkKind.NOT_A_LINK)


# Raw-tuple kernels; the search in ``difficulty`` calls these directly.

def _increasable(t: Sequence[int], i: int) -> bool:
    return i == len(t) - 1 or t[i] < t[i + 1]


def _decreasable(t: Sequence[int], i: int) -> bool:
    return i == 0 or t[i - 1] < t[i]


def _disp_up(t: tuple[int, ...], lam: ArithmeticProgression) -> tuple[int, ...]:
    return tuple(
        x + 1 if _increasable(t, i) and (x + i + 1) in lam else x
        for i, x in enumerate(t)
    )


def _disp_down(t: tuple[int, ...], lam: ArithmeticProgression) -> tuple[int, ...]:
    return tuple(
        x - 1 if _decreasable(t, i) and (x + i) in lam else x
        for i, x in enumerate(t)
    )


def _loose(t: Sequence[int]) -> set[int]:
    out = set()
    for i, x in enumerate(t):
        if _decreasable(t, i):
            out.add(x + i)
        if _increasable(t, i):
            out.add(x + i + 1)
    return out


def _two_link_progression(
    t: Sequence[int], j: int, k: int, loose: set[int]
) -> Optional[ArithmeticProgression]:
    """Progression linking ``t`` to ``t + e_j + e_k`` (j < k), or None."""
    vj, vk = t[j] + j + 1, t[k] + k + 1
    m = vk - vj
    if m < 2:
        return None
    for v in loose:
        if v != vj and v != vk and (v - vj) % m == 0:
            return None
    return ArithmeticProgression.residue(vj, m)


def disp_up(alpha: Iterable[int], lam: ArithmeticProgression) -> RamificationSequence:
    """Raise each increasable entry whose next vanishing value lies in ``lam``."""
    a = make_ram_seq(alpha)
    return RamificationSequence(_disp_up(a.entries, lam))


def disp_down(alpha: Iterable[int], lam: ArithmeticProgression) -> RamificationSequence:
    """Lower each decreasable entry whose vanishing value lies in ``lam``."""
    a = make_ram_seq(alpha)
    return RamificationSequence(_disp_down(a.entries, lam))


def loose_set(alpha: Iterable[int]) -> frozenset[int]:
    return frozenset(_loose(make_ram_seq(alpha).entries))


def minimal_progression(values: Iterable[int]) -> Optional[ArithmeticProgression]:
    """Smallest progression containing ``values``; None when only ``Z`` would do."""
    vals = sorted(set(values))
    if not vals:
        return ArithmeticProgression.empty()
    if len(vals) == 1:
        return ArithmeticProgression.singleton(vals[0])
    m = reduce(gcd, (v - vals[0] for v in vals[1:]))
    if m == 1:
        return None
    return ArithmeticProgression.residue(vals[0], m)


def classify_link(s: SkewShape) -> LinkVerdict:
    a, b = s.lower.entries, s.upper.entries
    n = skew_size(s)
    if n == 1:
        j = next(i for i in range(len(a)) if a[i] != b[i])
        return LinkVerdict(LinkKind.ONE_LINK, ArithmeticProgression.singleton(a[j] + j + 1))
    if n != 2:
        return NOT_A_LINK
    raised = [i for i in range(len(a)) if a[i] != b[i]]
    if len(raised) != 2:
        return NOT_A_LINK
    j, k = raised
    lam = _two_link_progression(a, j, k, _loose(a))
    if lam is None:
        return NOT_A_LINK
    return LinkVerdict(LinkKind.TWO_LINK, lam)


def is_linked_by(
    alpha: Iterable[int], beta: Iterable[int], lam: ArithmeticProgression
) -> bool:
    a, b = make_ram_seq(alpha), make_ram_seq(beta)
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    return _disp_down(b.entries, lam) == a.entries and _disp_up(a.entries, lam) == b.entries


def is_threshold_genus_one(s: SkewShape) -> bool:
    """Threshold genus is exactly 1 iff the shape is a 1-link or a 2-link."""
    return classify_link(s).is_link

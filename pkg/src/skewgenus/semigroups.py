"""Numerical semigroups and the Komeda-backed skew shapes.

A primitive semigroup ``S`` of genus ``g`` with ``wt(S) <= g - 1`` has
dimensionally proper Weierstrass points (Komeda).  That geometric input is
taken as an axiom; this module only checks its hypotheses and builds the
associated shape ``beta / 0^{r+1}`` with ``beta = (0, ..., 0, t_1, t_2 - 1,
..., t_g - (g - 1))``, whose threshold genus is then exactly ``g``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .core import RamificationSequence, SkewShape

__all__ = [
    "NumericalSemigroup",
    "KomedaCertificate",
    "semigroup_from_gaps",
    "parse_semigroup",
    "weight",
    "is_primitive",
    "stage_one_semigroup",
    "komeda_shape",
    "komeda_tg",
    "gap_shift",
]


@dataclass(frozen=True)
class NumericalSemigroup:
    gaps: tuple[int, ...]

    def __post_init__(self) -> None:
        gaps = tuple(int(t) for t in self.gaps)
        object.__setattr__(self, "gaps", gaps)
        if any(t <= 0 for t in gaps):
            raise ValueError(f"gaps must be positive: {gaps}")
        if any(gaps[i] >= gaps[i + 1] for i in range(len(gaps) - 1)):
            raise ValueError(f"gaps must be strictly increasing: {gaps}")
        # Past the largest gap everything is in S, so sums only need checking below it.
        gapset = set(gaps)
        top = self.largest_gap
        members = [s for s in range(1, top + 1) if s not in gapset]
        for x in members:
            for y in members:
                if x + y > top:
                    break
                if x + y in gapset:
                    raise ValueError(
                        f"complement of gaps {gaps} is not closed: {x} + {y} = {x + y} is a gap"
                    )

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def largest_gap(self) -> int:
        """Frobenius number, taken as 0 for the genus-0 semigroup."""
        return self.gaps[-1] if self.gaps else 0

    @property
    def multiplicity(self) -> int:
        """Smallest positive element."""
        gapset = set(self.gaps)
        s = 1
        while s in gapset:
            s += 1
        return s

    @property
    def weight(self) -> int:
        return sum(t - n for n, t in enumerate(self.gaps, start=1))

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps

    def elements(self, upto: int) -> list[int]:
        return [n for n in range(upto + 1) if n in self]

    def __str__(self) -> str:
        return "gaps:{" + ",".join(str(t) for t in self.gaps) + "}"


def semigroup_from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup(tuple(gaps))


_SEMIGROUP = re.compile(r"^gaps:\{([-\d,\s]*)\}$")


def parse_semigroup(text: str) -> NumericalSemigroup:
    m = _SEMIGROUP.match(text.strip())
    if m is None:
        raise ValueError(f"semigroup literal must look like 'gaps:{{1,2,5}}': {text!r}")
    body = m.group(1).strip()
    gaps = [int(tok) for tok in body.split(",")] if body else []
    return semigroup_from_gaps(gaps)


def weight(s: NumericalSemigroup) -> int:
    return s.weight


def is_primitive(s: NumericalSemigroup) -> bool:
    return 2 * s.multiplicity > s.largest_gap


def stage_one_semigroup(k: int) -> NumericalSemigroup:
    """``{0, k+2, k+3} ∪ {n >= 2k+4}``: genus ``2k+1``, weight ``2k``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return NumericalSemigroup(
        tuple(range(1, k + 2)) + tuple(range(k + 4, 2 * k + 4))
    )


def komeda_shape(s: NumericalSemigroup, r: int) -> SkewShape:
    g = s.genus
    if r < g - 1:
        raise ValueError(f"rank {r} too small for a genus-{g} semigroup (need r >= {g - 1})")
    beta = (0,) * (r + 1 - g) + tuple(t - i for i, t in enumerate(s.gaps))
    return SkewShape(RamificationSequence((0,) * (r + 1)), RamificationSequence(beta))


@dataclass(frozen=True)
class KomedaCertificate:
    """Axiom instance: ``tg(shape) == tg_value`` where ``shape = komeda_shape(S, r)``."""

    semigroup: NumericalSemigroup
    rank: int
    shape: SkewShape
    tg_value: int

    def check(self) -> None:
        """Re-verify every hypothesis; raises ``ValueError`` on failure."""
        _check_komeda_hypotheses(self.semigroup, self.rank)
        if self.shape != komeda_shape(self.semigroup, self.rank):
            raise ValueError("certificate shape does not match its semigroup")
        if self.tg_value != self.semigroup.genus:
            raise ValueError("certificate value differs from the semigroup genus")


def _check_komeda_hypotheses(s: NumericalSemigroup, r: int) -> None:
    g = s.genus
    if r < g - 1:
        raise ValueError(f"rank {r} too small for genus {g}")
    if g == 0:
        # Identity shape; tg = 0 needs no geometric input.
        return
    if not is_primitive(s):
        raise ValueError(f"{s} is not primitive")
    if s.weight > g - 1:
        raise ValueError(f"{s} has weight {s.weight} > genus - 1 = {g - 1}")


def komeda_tg(s: NumericalSemigroup, r: int) -> KomedaCertificate:
    _check_komeda_hypotheses(s, r)
    return KomedaCertificate(s, r, komeda_shape(s, r), s.genus)


def gap_shift(s: NumericalSemigroup) -> NumericalSemigroup:
    """Swap the largest gap ``t`` with ``t - 1 ∈ S`` for ``t - 1``; weight drops by 1."""
    if s.weight == 0:
        raise ValueError(f"{s} has weight 0; no gap can be shifted")
    gapset = set(s.gaps)
    t = max(t for t in s.gaps if t > 1 and (t - 1) not in gapset)
    return NumericalSemigroup(tuple(sorted((gapset - {t}) | {t - 1})))

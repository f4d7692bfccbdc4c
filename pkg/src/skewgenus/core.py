"""Ramification sequences, fixed-height skew shapes and Brill-Noether numbers.

A rank-``r`` ramification sequence is a nondecreasing integer tuple
``(alpha_0, ..., alpha_r)``; entries may be negative.  Its vanishing sequence
is ``a_i = alpha_i + i``.  A fixed-height skew shape ``beta/alpha`` is an
ordered pair of equal-rank sequences with ``alpha <= beta`` entrywise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "RamificationSequence",
    "VanishingSequence",
    "SkewShape",
    "BrillNoetherInput",
    "make_ram_seq",
    "parse_ram_seq",
    "parse_shape",
    "skew_size",
    "translate",
    "reflect",
    "rho",
    "rho_hat",
    "render_diagram",
]


@dataclass(frozen=True)
class RamificationSequence:
    """Nondecreasing integer tuple of implicit rank ``len(entries) - 1``.

    Comparison operators implement the entrywise partial order used for skew
    shapes, not lexicographic order.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("a ramification sequence needs at least one entry")
        for i in range(len(entries) - 1):
            if entries[i] > entries[i + 1]:
                raise ValueError(
                    f"ramification sequence decreases at index {i}: {entries}"
                )

    @property
    def rank(self) -> int:
        return len(self.entries) - 1

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def _check_rank(self, other: RamificationSequence) -> None:
        if len(self) != len(other):
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __le__(self, other: RamificationSequence) -> bool:
        self._check_rank(other)
        return all(x <= y for x, y in zip(self.entries, other.entries))

    def __lt__(self, other: RamificationSequence) -> bool:
        return self <= other and self.entries != other.entries

    def __ge__(self, other: RamificationSequence) -> bool:
        return other <= self

    def __gt__(self, other: RamificationSequence) -> bool:
        return other < self

    def size(self) -> int:
        """Sum of the entries, written ``|alpha|``."""
        return sum(self.entries)

    def vanishing(self) -> VanishingSequence:
        return VanishingSequence(tuple(x + i for i, x in enumerate(self.entries)))

    def shift(self, n: int) -> RamificationSequence:
        """``n + alpha``."""
        return RamificationSequence(tuple(n + x for x in self.entries))

    def complement(self, n: int) -> RamificationSequence:
        """``n - alpha = (n - alpha_r, ..., n - alpha_0)``."""
        return RamificationSequence(tuple(n - x for x in reversed(self.entries)))

    def exponent_form(self) -> str:
        """Render as ``0^2 1^3 2`` (exponent 1 omitted)."""
        parts = []
        i = 0
        e = self.entries
        while i < len(e):
            j = i
            while j + 1 < len(e) and e[j + 1] == e[i]:
                j += 1
            count = j - i + 1
            parts.append(f"{e[i]}" if count == 1 else f"{e[i]}^{count}")
            i = j + 1
        return " ".join(parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)


@dataclass(frozen=True)
class VanishingSequence:
    """Strictly increasing tuple ``a_i = alpha_i + i``."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("a vanishing sequence needs at least one entry")
        for i in range(len(entries) - 1):
            if entries[i] >= entries[i + 1]:
                raise ValueError(f"vanishing sequence not strictly increasing: {entries}")

    def ramification(self) -> RamificationSequence:
        return RamificationSequence(tuple(a - i for i, a in enumerate(self.entries)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SkewShape:
    """Fixed-height skew shape ``upper / lower`` (often written ``beta/alpha``)."""

    lower: RamificationSequence
    upper: RamificationSequence

    def __post_init__(self) -> None:
        if not isinstance(self.lower, RamificationSequence):
            object.__setattr__(self, "lower", make_ram_seq(self.lower))
        if not isinstance(self.upper, RamificationSequence):
            object.__setattr__(self, "upper", make_ram_seq(self.upper))
        if len(self.lower) != len(self.upper):
            raise ValueError(
                f"rank mismatch: lower has rank {self.lower.rank}, upper {self.upper.rank}"
            )
        if not self.lower <= self.upper:
            raise ValueError(f"lower {self.lower} is not <= upper {self.upper} entrywise")

    @property
    def rank(self) -> int:
        return self.lower.rank

    def __str__(self) -> str:
        return f"{self.upper} / {self.lower}"


@dataclass(frozen=True)
class BrillNoetherInput:
    g: int
    r: int
    d: int

    @property
    def rho(self) -> int:
        return rho(self.g, self.r, self.d)


def make_ram_seq(entries: Iterable[int]) -> RamificationSequence:
    if isinstance(entries, RamificationSequence):
        return entries
    return RamificationSequence(tuple(entries))


_EXP_TOKEN = re.compile(r"^(-?\d+)(?:\^(\d+))?$")


def parse_ram_seq(text: str) -> RamificationSequence:
    """Parse ``"(0,0,2,2,4)"``, ``"0,0,2,2,4"`` or exponent form ``"0^2 2^2 4"``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        raise ValueError(f"empty sequence literal: {text!r}")
    if "," in s:
        try:
            return make_ram_seq(int(tok) for tok in s.split(","))
        except ValueError as exc:
            raise ValueError(f"bad sequence literal {text!r}: {exc}") from None
    entries: list[int] = []
    for tok in s.split():
        m = _EXP_TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad token {tok!r} in sequence literal {text!r}")
        value, count = int(m.group(1)), int(m.group(2) or 1)
        entries.extend([value] * count)
    if not entries:
        raise ValueError(f"empty sequence literal: {text!r}")
    return make_ram_seq(entries)


def parse_shape(text: str) -> SkewShape:
    """Parse ``"upper / lower"``."""
    if text.count("/") != 1:
        raise ValueError(f"shape literal must look like 'upper / lower': {text!r}")
    upper, lower = text.split("/")
    return SkewShape(parse_ram_seq(lower), parse_ram_seq(upper))


def skew_size(s: SkewShape) -> int:
    return s.upper.size() - s.lower.size()


def translate(s: SkewShape, n: int) -> SkewShape:
    return SkewShape(s.lower.shift(n), s.upper.shift(n))


def reflect(s: SkewShape, n: int) -> SkewShape:
    """``(n - alpha) / (n - beta)``; an involution for fixed ``n``."""
    return SkewShape(s.upper.complement(n), s.lower.complement(n))


def rho(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def rho_hat(
    g: int, r: int, d: int, alpha: Sequence[int], beta: Sequence[int]
) -> int:
    alpha, beta = make_ram_seq(alpha), make_ram_seq(beta)
    if len(alpha) != r + 1 or len(beta) != r + 1:
        raise ValueError(
            f"rank mismatch: expected rank {r}, got {alpha.rank} and {beta.rank}"
        )
    return g - sum(max(0, g - d + r + alpha[r - i] + beta[i]) for i in range(r + 1))


def render_diagram(s: SkewShape) -> str:
    """ASCII skew diagram, top row is index ``r``.

    Each box is ``[]``; a row with no boxes shows a ``|`` guide at its left
    boundary.  Rows are left-aligned at ``min(lower)``.
    """
    left = min(s.lower)
    rows = []
    for i in reversed(range(len(s.lower))):
        lo, hi = s.lower[i], s.upper[i]
        pad = "  " * (lo - left)
        body = "[]" * (hi - lo) if hi > lo else "|"
        rows.append(pad + body)
    return "\n".join(rows)

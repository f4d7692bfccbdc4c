"""Chains of 1- and 2-links between ramification sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import RamificationSequence, SkewShape, make_ram_seq
from .displacement import LinkKind, LinkVerdict, classify_link

__all__ = ["LinkChain", "ChainVerificationError", "chain_from_steps"]


class ChainVerificationError(ValueError):
    pass


@dataclass(frozen=True)
class LinkChain:
    """``gamma^0 < gamma^1 < ... < gamma^n`` with a verdict per consecutive pair."""

    steps: tuple[RamificationSequence, ...]
    verdicts: tuple[LinkVerdict, ...]

    @property
    def start(self) -> RamificationSequence:
        return self.steps[0]

    @property
    def end(self) -> RamificationSequence:
        return self.steps[-1]

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.start, self.end)

    def __len__(self) -> int:
        """Number of links (not sequences)."""
        return len(self.verdicts)

    @property
    def one_links(self) -> int:
        return sum(v.kind is LinkKind.ONE_LINK for v in self.verdicts)

    @property
    def two_links(self) -> int:
        return sum(v.kind is LinkKind.TWO_LINK for v in self.verdicts)

    def verify(self) -> None:
        """Replay every step through ``classify_link``."""
        if len(self.steps) != len(self.verdicts) + 1:
            raise ChainVerificationError("need exactly one verdict per step")
        for i, (lo, hi, v) in enumerate(zip(self.steps, self.steps[1:], self.verdicts)):
            if not lo < hi:
                raise ChainVerificationError(f"step {i}: {hi} is not strictly above {lo}")
            got = classify_link(SkewShape(lo, hi))
            if not got.is_link:
                raise ChainVerificationError(f"step {i}: {hi} / {lo} is not a link")
            if got != v:
                raise ChainVerificationError(f"step {i}: recorded {v}, replay gives {got}")

    def reflected(self, n: int) -> LinkChain:
        """Chain for the reflected shape ``(n - alpha)/(n - beta)``, re-classified."""
        steps = tuple(s.complement(n) for s in reversed(self.steps))
        return chain_from_steps(steps)

    def translated(self, n: int) -> LinkChain:
        return chain_from_steps(tuple(s.shift(n) for s in self.steps))


def chain_from_steps(steps: Iterable[Sequence[int]]) -> LinkChain:
    """Build a chain, classifying each step; raises if any step is not a link."""
    seqs = tuple(make_ram_seq(s) for s in steps)
    if not seqs:
        raise ChainVerificationError("a chain needs at least one sequence")
    verdicts = []
    for i, (lo, hi) in enumerate(zip(seqs, seqs[1:])):
        if not lo < hi:
            raise ChainVerificationError(f"step {i}: {hi} is not strictly above {lo}")
        v = classify_link(SkewShape(lo, hi))
        if not v.is_link:
            raise ChainVerificationError(f"step {i}: {hi} / {lo} is not a link")
        verdicts.append(v)
    return LinkChain(seqs, tuple(verdicts))

"""Chain threshold and displacement difficulty, plus the scripted constructions.

``ct(beta/alpha)`` is the fewest 1-/2-link steps from ``alpha`` to ``beta``;
``c_delta = 2 ct - |beta/alpha|`` is the number of 1-links in such a chain.
Both are computed exactly by breadth-first search over the box
``[alpha, beta]``.  The ``tau`` family and the four-stage rectangle
decomposition build explicit chains that are always re-verified.
"""

from __future__ import annotations

import enum
import os
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .certificates import BoundCertificate, KomedaAxiom, LinkChainPiece, Split
from .chain import ChainVerificationError, LinkChain, chain_from_steps
from .core import RamificationSequence, SkewShape, skew_size
from .displacement import (
    LinkKind,
    LinkVerdict,
    _increasable,
    _loose,
    _two_link_progression,
    ArithmeticProgression,
)
from .semigroups import komeda_tg, stage_one_semigroup

__all__ = [
    "DEFAULT_STATE_BUDGET",
    "DifficultyError",
    "BudgetExceeded",
    "NoChain",
    "DifficultyResult",
    "CorollaryKind",
    "LinkChain",
    "tau",
    "chain_threshold",
    "displacement_difficulty",
    "build_corollary_chain",
    "stage_two_chain",
    "stage_three_chain",
    "main2_cost",
    "best_main2_ell",
    "main2_decomposition",
]

DEFAULT_STATE_BUDGET = 5_000_000


def default_budget() -> int:
    env = os.environ.get("SKEWGENUS_BUDGET")
    return int(env) if env else DEFAULT_STATE_BUDGET


class DifficultyError(Exception):
    pass


class BudgetExceeded(DifficultyError):
    def __init__(self, budget: int, what: str = "search visited more than {budget} states"):
        super().__init__(what.format(budget=budget))
        self.budget = budget


class NoChain(DifficultyError):
    pass


@dataclass(frozen=True)
class DifficultyResult:
    ct: int
    c_delta: int
    witness: LinkChain


def tau(n: int, a: int, b: int, c: int) -> RamificationSequence:
    """``0^{n-a} 1^{a-b} 2^{b-c} 3^c``, a rank ``n - 1`` sequence."""
    if not n >= a >= b >= c >= 0:
        raise ValueError(f"tau needs n >= a >= b >= c >= 0, got {(n, a, b, c)}")
    return RamificationSequence((0,) * (n - a) + (1,) * (a - b) + (2,) * (b - c) + (3,) * c)


# -- exact search -----------------------------------------------------------

def _successors(t: tuple[int, ...], hi: tuple[int, ...]):
    """All one-step links from ``t`` staying inside ``hi``, in lexicographic order."""
    up = [i for i in range(len(t)) if t[i] < hi[i] and _increasable(t, i)]
    out = []
    for i in up:
        s = list(t)
        s[i] += 1
        out.append((tuple(s), LinkVerdict(LinkKind.ONE_LINK, ArithmeticProgression.singleton(t[i] + i + 1))))
    if len(up) >= 2:
        loose = _loose(t)
        for x, j in enumerate(up):
            for k in up[x + 1:]:
                lam = _two_link_progression(t, j, k, loose)
                if lam is None:
                    continue
                s = list(t)
                s[j] += 1
                s[k] += 1
                out.append((tuple(s), LinkVerdict(LinkKind.TWO_LINK, lam)))
    out.sort(key=lambda pair: pair[0])
    return out


def chain_threshold(s: SkewShape, state_budget: Optional[int] = None) -> DifficultyResult:
    """Exact ``ct`` and ``c_delta`` by breadth-first search, with a witness chain."""
    budget = default_budget() if state_budget is None else state_budget
    if budget <= 0:
        raise BudgetExceeded(budget)
    lo, hi = s.lower.entries, s.upper.entries
    parent: dict[tuple[int, ...], Optional[tuple[tuple[int, ...], LinkVerdict]]] = {lo: None}
    queue = deque([lo])
    while queue:
        t = queue.popleft()
        if t == hi:
            break
        for nxt, verdict in _successors(t, hi):
            if nxt in parent:
                continue
            parent[nxt] = (t, verdict)
            if len(parent) > budget:
                raise BudgetExceeded(budget)
            queue.append(nxt)
    if hi not in parent:
        raise NoChain(f"no link chain from {s.lower} to {s.upper}")
    steps = [hi]
    verdicts = []
    node = hi
    while parent[node] is not None:
        prev, v = parent[node]
        verdicts.append(v)
        steps.append(prev)
        node = prev
    steps.reverse()
    verdicts.reverse()
    chain = LinkChain(tuple(RamificationSequence(x) for x in steps), tuple(verdicts))
    ct = len(chain)
    return DifficultyResult(ct, 2 * ct - skew_size(s), chain)


def displacement_difficulty(s: SkewShape, state_budget: Optional[int] = None) -> int:
    return chain_threshold(s, state_budget).c_delta


# -- scripted chains ----------------------------------------------------------

class CorollaryKind(enum.Enum):
    INCREASE_AC = "increase-ac"
    INCREASE_AB = "increase-ab"
    FLOOR_CEIL = "floor-ceil"


def _verified_or_search(
    steps: list[RamificationSequence], budget: Optional[int], max_c_delta: int
) -> LinkChain:
    try:
        return chain_from_steps(steps)
    except ChainVerificationError:
        res = chain_threshold(SkewShape(steps[0], steps[-1]), budget)
        if res.c_delta > max_c_delta:
            raise
        return res.witness


def _increase_ac_steps(n: int, a: int, b: int, c: int) -> list[RamificationSequence]:
    if not (n > a >= b > c and a - c >= n // 2 >= c):
        raise ValueError(
            f"increase-ac needs n > a >= b > c and a - c >= floor(n/2) >= c, got {(n, a, b, c)}"
        )
    return [tau(n, a, b, c), tau(n, a + 1, b, c + 1)]


def _increase_ab_steps(n: int) -> list[RamificationSequence]:
    if n < 5 or n % 2 == 0:
        raise ValueError(f"increase-ab needs an odd n >= 5, got {n}")
    f = n // 2
    return [tau(n, n - 1, f, f), tau(n, n, f + 1, f)]


def _floor_ceil_steps(n: int, start: str) -> list[RamificationSequence]:
    """From ``tau^n_{m, f, 0}`` to ``1 + tau^n_{m', f, 0}`` where ``{m, m'} = {floor, ceil}``.

    ``f`` increase-ac steps reach ``tau^n_{m+f, f, f}``; when ``m + f < n``
    one increase-ab step finishes.
    """
    if n < 4:
        raise ValueError(f"floor-ceil needs n >= 4, got {n}")
    f, c = n // 2, (n + 1) // 2
    if start not in ("floor", "ceil"):
        raise ValueError(f"start must be 'floor' or 'ceil', got {start!r}")
    m = f if start == "floor" else c
    steps = [tau(n, m + j, f, j) for j in range(f + 1)]
    if m + f < n:
        steps.append(tau(n, n, f + 1, f))
    return steps


def build_corollary_chain(
    kind: CorollaryKind, *, budget: Optional[int] = None, **params: int
) -> LinkChain:
    """Explicit difficulty-0 chains of the ``tau`` family.

    ``INCREASE_AC`` takes ``n, a, b, c``; ``INCREASE_AB`` takes odd ``n``;
    ``FLOOR_CEIL`` takes ``n`` and ``start`` (``"floor"`` or ``"ceil"``).
    """
    kind = CorollaryKind(kind)
    if kind is CorollaryKind.INCREASE_AC:
        steps = _increase_ac_steps(params["n"], params["a"], params["b"], params["c"])
    elif kind is CorollaryKind.INCREASE_AB:
        steps = _increase_ab_steps(params["n"])
    else:
        steps = _floor_ceil_steps(params["n"], params.get("start", "floor"))
    return _verified_or_search(steps, budget, max_c_delta=0)


def _stage_two_steps(a: int, ell: int) -> list[RamificationSequence]:
    f, c, k = a // 2, (a + 1) // 2, (a - 1) // 2
    steps = [tau(a, 2 * k + 1, k, k)]
    if a % 2 == 0:
        steps.append(tau(a, 2 * k + 1, k + 1, k))
        steps.append(tau(a, 2 * k + 2, k + 1, k + 1))
    # steps[-1] is now 1 + tau^a_{f,f,0}
    offset, start = 1, "floor"
    for _ in range(ell - 1):
        steps.extend(x.shift(offset) for x in _floor_ceil_steps(a, start)[1:])
        offset += 1
        if c != f:
            start = "ceil" if start == "floor" else "floor"
    if start == "floor" and c != f:
        steps.append(tau(a, c, f, 0).shift(ell))
    return steps


def stage_two_chain(a: int, ell: int, budget: Optional[int] = None) -> LinkChain:
    """Chain from ``tau^a_{2k+1,k,k}`` to ``ell + tau^a_{ceil(a/2), floor(a/2), 0}``, ``c_delta <= 1``."""
    if a < 4 or ell < 1:
        raise ValueError(f"stage two needs a >= 4 and ell >= 1, got a={a}, ell={ell}")
    return _verified_or_search(_stage_two_steps(a, ell), budget, max_c_delta=1)


def stage_three_chain(a: int, b: int, ell: int, budget: Optional[int] = None) -> LinkChain:
    """Chain from ``ell + tau^a_{ceil,floor,0}`` to ``b - tau^a_{2k+1,k,k}``: a reflected stage two."""
    return stage_two_chain(a, b - ell - 2, budget).reflected(b)


def _stage_two_length(a: int, ell: int) -> int:
    f = a // 2
    if a % 2 == 0:
        return 2 + (ell - 1) * f
    from_floor = ell // 2
    from_ceil = (ell - 1) // 2
    return from_floor * (f + 1) + from_ceil * f + (ell % 2)


def _check_main2_params(a: int, b: int, ell: int) -> None:
    if a < 4 or b < 4:
        raise ValueError(f"the four-stage decomposition needs a, b >= 4, got {(a, b)}")
    if not 1 <= ell <= b - 3:
        raise ValueError(f"ell must lie in [1, b-3] = [1, {b - 3}], got {ell}")


def main2_cost(a: int, b: int, ell: int = 1) -> int:
    """Total cost of the four-stage decomposition without building it."""
    _check_main2_params(a, b, ell)
    k = (a - 1) // 2
    return 2 * (2 * k + 1) + _stage_two_length(a, ell) + _stage_two_length(a, b - ell - 2)


def best_main2_ell(a: int, b: int) -> int:
    """Smallest ``ell`` in ``[1, b-3]`` minimising :func:`main2_cost`."""
    _check_main2_params(a, b, 1)
    return min(range(1, b - 2), key=lambda ell: main2_cost(a, b, ell))


def main2_decomposition(
    a: int, b: int, ell: int = 1, budget: Optional[int] = None
) -> BoundCertificate:
    """Certificate for ``tg(a x b) <= floor(ab/2 + 2)`` via four stages.

    ``0^a -> tau^a_{2k+1,k,k} -> ell + tau^a_{ceil,floor,0} -> b - tau^a_{2k+1,k,k} -> b^a``;
    the outer stages are Komeda instances, the inner ones verified chains.
    """
    _check_main2_params(a, b, ell)
    k = (a - 1) // 2
    komeda = komeda_tg(stage_one_semigroup(k), a - 1)
    inner = tau(a, 2 * k + 1, k, k)
    if komeda.shape.upper != inner:
        raise ChainVerificationError(f"Komeda shape {komeda.shape.upper} differs from {inner}")

    def chain_piece(chain: LinkChain) -> BoundCertificate:
        return BoundCertificate(chain.shape, len(chain), 1, LinkChainPiece(chain))

    stage1 = BoundCertificate(komeda.shape, komeda.tg_value, komeda.tg_value, KomedaAxiom(komeda))
    stage2 = chain_piece(stage_two_chain(a, ell, budget))
    stage3 = chain_piece(stage_three_chain(a, b, ell, budget))
    ax4 = KomedaAxiom(komeda, reflect=b)
    stage4 = BoundCertificate(ax4.shape, komeda.tg_value, komeda.tg_value, ax4)
    pieces = (stage1, stage2, stage3, stage4)
    for x, y in zip(pieces, pieces[1:]):
        if x.target.upper != y.target.lower:
            raise ChainVerificationError(f"stages do not meet: {x.target.upper} vs {y.target.lower}")
    total = sum(p.upper for p in pieces)
    if total > (a * b + 4) // 2:
        raise ChainVerificationError(f"four-stage total {total} exceeds floor(ab/2 + 2)")
    return BoundCertificate(
        (a, b), total, a + b - 1, Split(pieces, "skew"), {"source": "main2", "ell": ell}
    )

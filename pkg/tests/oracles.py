"""Independent reference implementations used only by the tests.

None of these import the library's kernels.  Displacement is redone on the
set of vanishing values (a value moves iff its neighbour slot is free), links
are found by trying every progression that could matter, and chain
thresholds by exhaustive recursion over all intermediate sequences.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath


# -- progressions as plain predicates ---------------------------------------

def progressions(lo: int, hi: int):
    """Every distinct restriction to ``[lo, hi]`` of an allowed progression, as (label, test)."""
    yield ("empty", None, None)
    for n in range(lo, hi + 1):
        yield ("single", n, 0)
    for m in range(2, hi - lo + 2):
        for o in range(m):
            yield ("residue", o, m)


def member(prog, x: int) -> bool:
    kind, o, m = prog
    if kind == "empty":
        return False
    if kind == "single":
        return x == o
    return (x - o) % m == 0


# -- displacement on vanishing sets -----------------------------------------

def set_disp_up(alpha, prog):
    v = [a + i for i, a in enumerate(alpha)]
    occupied = set(v)
    moved = [x + 1 if (x + 1 not in occupied or x == v[-1]) and member(prog, x + 1) else x for x in v]
    return tuple(x - i for i, x in enumerate(moved))


def set_disp_down(alpha, prog):
    v = [a + i for i, a in enumerate(alpha)]
    occupied = set(v)
    moved = [x - 1 if (x - 1 not in occupied or x == v[0]) and member(prog, x) else x for x in v]
    return tuple(x - i for i, x in enumerate(moved))


def set_loose(alpha):
    v = [a + i for i, a in enumerate(alpha)]
    occ = set(v)
    out = set()
    for x in v:
        if x - 1 not in occ or x == v[0]:
            out.add(x)
        if x + 1 not in occ or x == v[-1]:
            out.add(x + 1)
    return out


def linking_progressions(alpha, beta):
    """All progressions (restricted to a window around the data) linking alpha to beta."""
    vals = [a + i for i, a in enumerate(alpha)] + [b + i for i, b in enumerate(beta)]
    lo, hi = min(vals) - 1, max(vals) + 2
    out = []
    for prog in progressions(lo, hi):
        if set_disp_up(alpha, prog) == tuple(beta) and set_disp_down(beta, prog) == tuple(alpha):
            out.append(prog)
    return out


def brute_link(alpha, beta):
    """('none' | '1' | '2' | 'big', largest linking modulus or None)."""
    alpha, beta = tuple(alpha), tuple(beta)
    size = sum(beta) - sum(alpha)
    if size == 0:
        return "none", None
    links = linking_progressions(alpha, beta)
    if not links:
        return "none", None
    kind = {1: "1", 2: "2"}.get(size, "big")
    mods = [p[2] for p in links if p[0] == "residue"]
    return kind, (max(mods) if mods else None)


# -- exhaustive chain threshold ---------------------------------------------

def _between(lo, hi):
    ranges = [range(x, y + 1) for x, y in zip(lo, hi)]
    for t in itertools.product(*ranges):
        if all(t[i] <= t[i + 1] for i in range(len(t) - 1)):
            yield t


@lru_cache(maxsize=None)
def _is_step(alpha, beta) -> bool:
    # Chains may only use 1- and 2-links; larger linked pairs do not count.
    return brute_link(alpha, beta)[0] in ("1", "2")


@lru_cache(maxsize=None)
def oracle_ct(alpha: tuple, beta: tuple) -> int:
    """Fewest link steps from alpha to beta, by recursion over every next sequence."""
    if alpha == beta:
        return 0
    best = None
    for mid in _between(alpha, beta):
        if mid == alpha:
            continue
        if _is_step(alpha, mid):
            c = 1 + oracle_ct(mid, beta)
            if best is None or c < best:
                best = c
    assert best is not None
    return best


def box_shapes(max_len: int = 4, top: int = 3):
    """Every pair alpha <= beta of nondecreasing sequences with entries in [0, top]."""
    for n in range(1, max_len + 1):
        seqs = list(itertools.combinations_with_replacement(range(top + 1), n))
        for a in seqs:
            for b in seqs:
                if all(x <= y for x, y in zip(a, b)):
                    yield a, b


# -- numerics -----------------------------------------------------------------

def pareschi_f(d: int):
    with mpmath.workdps(60):
        u = mpmath.sqrt(32 * d - 215)
        return u ** 3 / 1536 + mpmath.mpf(23) * d / 16 - 541 * u / 1536 - mpmath.mpf(397) / 128


def float_threshold(b: int) -> int:
    d = 20
    while pareschi_f(d) - d + 3 < b:
        d += 1
    return d


def sernesi_min_genus(b: int) -> int:
    """Least g with g >= b + 3 and g <= C(g + 1 - b, 2), by direct search."""
    g = b + 3
    while g > comb(g + 1 - b, 2):
        g += 1
    return g


def asy_by_blocks(a: int, b: int, tg4, tg_small) -> int:
    """Stack floor(a/4) height-4 blocks and one leftover block."""
    q, r = divmod(a, 4)
    return q * tg4(b) + (tg_small(r, b) if r else 0)


def eps(a: int) -> Fraction:
    c = -(-a // 4)
    return Fraction(4 * c - a, c)

"""Threshold-genus bounds for rectangles and their certificates.

Everything on a verdict path is integer arithmetic.  Pareschi's function

    f(d) = ((32d - 215)^{3/2} - 541 (32d - 215)^{1/2}) / 1536 + 23d/16 - 397/128

is compared against rationals by clearing the denominator and squaring.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional, Union

from .certificates import (
    BaseCase,
    BoundCertificate,
    FormulaBound,
    KomedaAxiom,
    LinkChainPiece,
    Split,
)
from .core import RamificationSequence, SkewShape, rho
from .difficulty import BudgetExceeded, best_main2_ell, default_budget, main2_cost, main2_decomposition

__all__ = [
    "CertificateError",
    "ExactAlgebraic",
    "f_at_least",
    "tg_lower",
    "ceil_half_plus_sqrt",
    "base_tg_upper",
    "base_case_certificate",
    "pareschi_threshold",
    "h",
    "epsilon",
    "asy_upper",
    "main2_upper",
    "tg_upper",
    "replay_certificate",
    "Existence",
    "ExistenceVerdict",
    "exists_dimensionally_proper",
]


class CertificateError(ValueError):
    pass


# -- exact arithmetic for f(d) ---------------------------------------------

def _sqrt_times_at_least(n: int, c: int, p: int) -> bool:
    """Decide ``sqrt(n) * c >= p`` for integers, ``n >= 0``."""
    if c >= 0:
        if p <= 0:
            return True
        return n * c * c >= p * p
    if p >= 0:
        return n == 0 and p == 0
    return n * c * c <= p * p


@dataclass(frozen=True)
class ExactAlgebraic:
    """``f(d)`` held as ``(u^3 - 541u + 2208d - 4764) / 1536`` with ``u^2 = 32d - 215``."""

    d: int

    def __post_init__(self) -> None:
        if self.radicand < 0:
            raise ValueError(f"f(d) needs 32d - 215 >= 0, got d={self.d}")

    @property
    def radicand(self) -> int:
        return 32 * self.d - 215

    def at_least(self, x: Union[int, Fraction]) -> bool:
        """Exact ``f(d) >= x``."""
        rhs = 1536 * Fraction(x) - 2208 * self.d + 4764
        p, q = rhs.numerator, rhs.denominator
        n = self.radicand
        return _sqrt_times_at_least(n, (n - 541) * q, p)


def f_at_least(d: int, x: Union[int, Fraction]) -> bool:
    return ExactAlgebraic(d).at_least(x)


@lru_cache(maxsize=None)
def pareschi_threshold(b: int) -> int:
    """``min{d >= 20 : f(d) - d + 3 >= b}``.

    ``f(d) - d`` is increasing for ``d >= 20``, so gallop then bisect.
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")

    def ok(d: int) -> bool:
        return f_at_least(d, b + d - 3)

    lo = 20
    if ok(lo):
        return lo
    step = 1
    hi = lo + step
    while not ok(hi):
        lo = hi
        step *= 2
        hi = lo + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def h(b: int) -> int:
    return pareschi_threshold(b) - 3


# -- closed-form bounds -------------------------------------------------------

def tg_lower(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError(f"a, b must be >= 1, got {(a, b)}")
    return a + b - 1


def ceil_half_plus_sqrt(b: int) -> int:
    """``ceil(1/2 + sqrt(2b + 1/4)) = ceil((1 + sqrt(8b + 1)) / 2)``."""
    n = 8 * b + 1
    s = isqrt(n)
    t = s if s * s == n else s + 1  # ceil(sqrt(n))
    return (t + 2) // 2


def _base_formula(id: str, a: int, b: int) -> int:
    if id == "a1":
        if a != 1:
            raise ValueError("a1 applies to a = 1")
        return b
    if id == "a2":
        if a != 2:
            raise ValueError("a2 applies to a = 2")
        return b + 1
    if id == "a3":
        if a != 3 or b < 3:
            raise ValueError("a3 applies to a = 3, b >= 3")
        return b + ceil_half_plus_sqrt(b)
    if id == "tg4b":
        if a != 4:
            raise ValueError("tg4b applies to a = 4")
        return b - 3 + pareschi_threshold(b)
    raise ValueError(f"unknown base case {id!r}")


def _base_case_id(a: int, b: int) -> tuple[str, int, int]:
    """Formula id and its (a, b) arguments for a rectangle with ``a <= 4``."""
    if a == 1:
        return "a1", a, b
    if a == 2:
        return "a2", a, b
    if a == 3:
        if b >= 3:
            return "a3", a, b
        return _base_case_id(b, a)
    if a == 4:
        return "tg4b", a, b
    raise ValueError(f"no base case for a = {a}")


def base_case_certificate(a: int, b: int) -> BoundCertificate:
    if a < 1 or b < 1:
        raise ValueError(f"a, b must be >= 1, got {(a, b)}")
    id, x, y = _base_case_id(a, b)
    exact = id in ("a1", "a2")
    return BoundCertificate((a, b), _base_formula(id, x, y), tg_lower(a, b), BaseCase(id, x, y, exact))


def _best_base_certificate(a: int, b: int) -> BoundCertificate:
    """Sharpest base case for ``a x b`` in either orientation; target stays ``(a, b)``."""
    options = [base_case_certificate(x, y) for x, y in ((a, b), (b, a)) if x <= 4]
    best = min(options, key=lambda c: c.upper)
    return BoundCertificate((a, b), best.upper, tg_lower(a, b), best.node)


def base_tg_upper(a: int, b: int) -> int:
    """Literature bound for ``a in {1,2,3,4}``; ``a = 4`` is Pareschi's bound for every ``b``."""
    if a not in (1, 2, 3, 4):
        raise ValueError(f"base cases cover a in 1..4, got {a}")
    return base_case_certificate(a, b).upper


def epsilon(a: int) -> Fraction:
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    return Fraction((-a) % 4, -(-a // 4))


def asy_upper(a: int, b: int) -> int:
    """Stack ``floor(a/4)`` blocks of height 4 and one block of height ``a mod 4``."""
    if a < 1 or b < 1:
        raise ValueError(f"a, b must be >= 1, got {(a, b)}")
    q, rem = divmod(a, 4)
    extra = {0: 0, 1: 0, 2: 1, 3: ceil_half_plus_sqrt(b)}[rem]
    return -(-a // 4) * b + q * h(b) + extra


def main2_upper(a: int, b: int, budget: Optional[int] = None) -> BoundCertificate:
    """Certificate for ``tg(a x b) <= floor(ab/2 + 2)``, ``a, b >= 2``."""
    if a < 2 or b < 2:
        raise ValueError(f"main2 needs a, b >= 2, got {(a, b)}")
    if a >= 4 and b >= 4:
        cert = main2_decomposition(a, b, best_main2_ell(a, b), budget)
    else:
        cert = _best_base_certificate(a, b)
    if cert.upper > (a * b + 4) // 2:
        raise CertificateError(f"main2 bound {cert.upper} exceeds floor(ab/2 + 2) for {(a, b)}")
    return cert


# -- subadditive DP -----------------------------------------------------------

# Candidate tags, in tie-break priority order.
_BASE, _MAIN2, _MAIN2_T, _ASY, _ASY_T, _BN = "base", "main2", "main2-t", "asy", "asy-t", "bn"

_memo: dict[tuple[int, int], tuple[int, tuple]] = {}
_memo_lock = threading.Lock()


def _cell(a: int, b: int) -> tuple[int, tuple]:
    best: Optional[tuple[int, tuple]] = None

    def offer(value: int, choice: tuple) -> None:
        nonlocal best
        if best is None or value < best[0]:
            best = (value, choice)

    if min(a, b) <= 4:
        offer(_best_base_certificate(a, b).upper, (_BASE,))
    if a >= 4 and b >= 4:
        offer(main2_cost(a, b, best_main2_ell(a, b)), (_MAIN2,))
        offer(main2_cost(b, a, best_main2_ell(b, a)), (_MAIN2_T,))
    offer(asy_upper(a, b), (_ASY,))
    offer(asy_upper(b, a), (_ASY_T,))
    offer(a * b, (_BN,))
    for a1 in range(1, a // 2 + 1):
        offer(_memo[a1, b][0] + _memo[a - a1, b][0], ("row", a1))
    for b1 in range(1, b // 2 + 1):
        offer(_memo[a, b1][0] + _memo[a, b - b1][0], ("column", b1))
    assert best is not None
    return best


def _fill(a: int, b: int, budget: int) -> None:
    work = 0
    with _memo_lock:
        for x in range(1, a + 1):
            for y in range(1, b + 1):
                if (x, y) in _memo:
                    continue
                work += x // 2 + y // 2 + 5
                if work > budget:
                    raise BudgetExceeded(budget, "bound table needs more than {budget} work units")
                _memo[x, y] = _cell(x, y)


@lru_cache(maxsize=4096)
def _certificate(a: int, b: int) -> BoundCertificate:
    value, choice = _memo[a, b]
    tag = choice[0]
    lower = tg_lower(a, b)
    if tag == _BASE:
        cert = _best_base_certificate(a, b)
    elif tag == _MAIN2:
        cert = main2_decomposition(a, b, best_main2_ell(a, b))
    elif tag == _MAIN2_T:
        kid = main2_decomposition(b, a, best_main2_ell(b, a))
        cert = BoundCertificate((a, b), value, lower, Split((kid,), "transpose"))
    elif tag == _ASY:
        cert = BoundCertificate((a, b), value, lower, FormulaBound("asy-precise", a, b))
    elif tag == _ASY_T:
        cert = BoundCertificate((a, b), value, lower, FormulaBound("asy-precise", b, a))
    elif tag == _BN:
        cert = BoundCertificate((a, b), value, lower, FormulaBound("bn-trivial", a, b))
    elif tag == "row":
        a1 = choice[1]
        kids = (_certificate(a1, b), _certificate(a - a1, b))
        cert = BoundCertificate((a, b), value, lower, Split(kids, "row"))
    else:
        b1 = choice[1]
        kids = (_certificate(a, b1), _certificate(a, b - b1))
        cert = BoundCertificate((a, b), value, lower, Split(kids, "column"))
    if cert.upper != value:
        raise CertificateError(f"certificate for {(a, b)} gives {cert.upper}, DP expected {value}")
    return cert


def tg_upper(a: int, b: int, budget: Optional[int] = None) -> BoundCertificate:
    """Best certified upper bound on ``tg(a x b)`` over base cases, closed forms and splits."""
    if a < 1 or b < 1:
        raise ValueError(f"a, b must be >= 1, got {(a, b)}")
    _fill(a, b, default_budget() if budget is None else budget)
    cert = _certificate(a, b)
    # Sanity only: a bound below a + b - 1 would mean a broken formula.
    if cert.upper < tg_lower(a, b):
        raise CertificateError(f"upper bound {cert.upper} below lower bound for {(a, b)}")
    return cert


# -- replay ----------------------------------------------------------------

def _rect_shape(a: int, b: int) -> SkewShape:
    return SkewShape(RamificationSequence((0,) * a), RamificationSequence((b,) * a))


def _target_shape(cert: BoundCertificate) -> SkewShape:
    if cert.is_rectangle:
        return _rect_shape(*cert.target)
    return cert.target


def replay_certificate(cert: BoundCertificate) -> int:
    """Re-verify a certificate tree from scratch; returns the number of nodes checked."""
    if cert.lower > cert.upper:
        raise CertificateError(f"lower {cert.lower} exceeds upper {cert.upper}")
    node = cert.node
    if cert.is_rectangle:
        a, b = cert.target
        if cert.lower > tg_lower(a, b):
            raise CertificateError(f"claimed lower bound {cert.lower} is not proven for {(a, b)}")
    if isinstance(node, BaseCase):
        if not cert.is_rectangle or tuple(sorted(cert.target)) != tuple(sorted((node.a, node.b))):
            raise CertificateError(f"base case {node.id} does not match target {cert.target}")
        try:
            value = _base_formula(node.id, node.a, node.b)
        except ValueError as exc:
            raise CertificateError(str(exc)) from None
        if value != cert.upper:
            raise CertificateError(f"base case {node.id}{(node.a, node.b)} = {value}, claimed {cert.upper}")
        return 1
    if isinstance(node, FormulaBound):
        if not cert.is_rectangle or tuple(sorted(cert.target)) != tuple(sorted((node.a, node.b))):
            raise CertificateError(f"formula {node.id} does not match target {cert.target}")
        if node.id == "asy-precise":
            value = asy_upper(node.a, node.b)
        elif node.id == "bn-trivial":
            value = node.a * node.b
        else:
            raise CertificateError(f"unknown formula {node.id!r}")
        if value != cert.upper:
            raise CertificateError(f"formula {node.id} = {value}, claimed {cert.upper}")
        return 1
    if isinstance(node, LinkChainPiece):
        chain = node.chain
        try:
            chain.verify()
        except ValueError as exc:
            raise CertificateError(f"chain replay failed: {exc}") from None
        if chain.shape != _target_shape(cert):
            raise CertificateError("chain endpoints differ from the target shape")
        if len(chain) != cert.upper:
            raise CertificateError(f"chain has {len(chain)} links, claimed {cert.upper}")
        if cert.lower > (1 if chain.start != chain.end else 0):
            raise CertificateError("chain pieces only certify tg >= 1")
        return 1
    if isinstance(node, KomedaAxiom):
        try:
            node.cert.check()
        except ValueError as exc:
            raise CertificateError(f"Komeda hypotheses fail: {exc}") from None
        if node.shape != _target_shape(cert):
            raise CertificateError("Komeda shape differs from the target shape")
        if cert.upper != node.cert.tg_value or cert.lower > node.cert.tg_value:
            raise CertificateError("Komeda value mismatch")
        return 1
    if isinstance(node, Split):
        kids = node.children
        if not kids:
            raise CertificateError("empty split")
        if sum(k.upper for k in kids) != cert.upper:
            raise CertificateError(f"split children sum to {sum(k.upper for k in kids)}, claimed {cert.upper}")
        if node.rule in ("row", "column"):
            if not cert.is_rectangle or not all(k.is_rectangle for k in kids):
                raise CertificateError(f"{node.rule} split needs rectangle targets")
            a, b = cert.target
            axis = 0 if node.rule == "row" else 1
            fixed = b if axis == 0 else a
            if any(k.target[1 - axis] != fixed for k in kids):
                raise CertificateError(f"{node.rule} split children do not share the fixed side")
            if sum(k.target[axis] for k in kids) != cert.target[axis]:
                raise CertificateError(f"{node.rule} split children do not add up")
        elif node.rule == "transpose":
            # tg(a x b) = tg(b x a)
            if len(kids) != 1 or not cert.is_rectangle or not kids[0].is_rectangle:
                raise CertificateError("transpose needs one rectangle child")
            if kids[0].target != cert.target[::-1]:
                raise CertificateError(f"transpose child {kids[0].target} does not swap {cert.target}")
        elif node.rule == "skew":
            shapes = [_target_shape(k) for k in kids]
            whole = _target_shape(cert)
            if shapes[0].lower != whole.lower or shapes[-1].upper != whole.upper:
                raise CertificateError("skew split does not span the target")
            for x, y in zip(shapes, shapes[1:]):
                if x.upper != y.lower:
                    raise CertificateError(f"skew pieces do not meet: {x.upper} vs {y.lower}")
        else:
            raise CertificateError(f"unknown split rule {node.rule!r}")
        return 1 + sum(replay_certificate(k) for k in kids)
    raise CertificateError(f"unknown node {node!r}")


# -- existence verdicts -----------------------------------------------------

class Existence(enum.Enum):
    PROVEN_YES = "proven-yes"
    CLASSICAL_YES = "classical-yes"
    OUT_OF_SCOPE = "out-of-scope"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ExistenceVerdict:
    kind: Existence
    certificate: Optional[BoundCertificate] = None
    a: Optional[int] = None
    b: Optional[int] = None

    def __str__(self) -> str:
        return self.kind.value


def exists_dimensionally_proper(
    g: int, r: int, d: int, budget: Optional[int] = None
) -> ExistenceVerdict:
    """Whether the (g, r, d) Brill-Noether space provably has a component of dimension rho.

    Never returns a negative answer: ``UNKNOWN`` means no bound here reaches ``g``.
    """
    if min(g, r, d) < 0:
        raise ValueError(f"g, r, d must be nonnegative, got {(g, r, d)}")
    a, b = r + 1, g - d + r
    if b < 0:
        return ExistenceVerdict(Existence.OUT_OF_SCOPE, a=a, b=b)
    if rho(g, r, d) >= 0:
        return ExistenceVerdict(Existence.CLASSICAL_YES, a=a, b=b)
    cert = tg_upper(a, b, budget)
    if g >= cert.upper:
        return ExistenceVerdict(Existence.PROVEN_YES, cert, a, b)
    return ExistenceVerdict(Existence.UNKNOWN, cert, a, b)

"""Deterministic text reports for the worked examples, compared against golden files."""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from .bounds import asy_upper, base_tg_upper, main2_upper, pareschi_threshold
from .certificates import BoundCertificate, KomedaAxiom, LinkChainPiece, shape_literal
from .core import SkewShape, make_ram_seq, render_diagram, skew_size
from .difficulty import chain_threshold, main2_decomposition, tau
from .displacement import classify_link, disp_down, disp_up, loose_set, parse_progression
from .semigroups import is_primitive, komeda_shape, stage_one_semigroup

__all__ = ["TARGETS", "report", "golden_name", "golden_text", "first_divergence", "write_golden"]


def _indent(text: str, prefix: str = "    ") -> str:
    return "\n".join(prefix + line for line in text.splitlines())


def _fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def fig_disp() -> str:
    alpha = make_ram_seq((2, 2, 4))
    lam = parse_progression("1+3Z")
    beta = disp_up(alpha, lam)
    loose = loose_set(alpha)
    out = [
        f"alpha = {alpha}, Lambda = {lam}",
        f"vanishing sequence: {','.join(map(str, alpha.vanishing().entries))}",
        f"loose set: {_fmt_set(loose)}; in Lambda: {_fmt_set(v for v in loose if v in lam)}",
        "",
        "panel 1: alpha",
        _indent(render_diagram(SkewShape(make_ram_seq((0, 0, 0)), alpha))),
        "",
        "panel 2: added boxes beta / alpha",
        _indent(render_diagram(SkewShape(alpha, beta))),
        "",
        f"panel 3: disp+ = {beta}",
        _indent(render_diagram(SkewShape(make_ram_seq((0, 0, 0)), beta))),
        "",
        f"disp- of beta = {disp_down(beta, lam)}",
        f"verdict: {classify_link(SkewShape(alpha, beta))}",
    ]
    return "\n".join(out) + "\n"


def tau_links() -> str:
    cases = [((10, 8, 5, 3), (10, 9, 5, 4)), ((9, 8, 4, 4), (9, 9, 5, 4))]
    out = []
    for lo, hi in cases:
        s = SkewShape(tau(*lo), tau(*hi))
        res = chain_threshold(s)
        out += [
            "tau^%d_{%d,%d,%d} / tau^%d_{%d,%d,%d}" % (hi + lo),
            f"  shape: {shape_literal(s)}",
            f"  verdict: {classify_link(s)}",
            f"  ct = {res.ct}, c_delta = {res.c_delta}",
            _indent(render_diagram(s)),
            "",
        ]
    return "\n".join(out)


def _stage_lines(i: int, piece: BoundCertificate) -> list[str]:
    s = piece.target
    size = skew_size(s)
    node = piece.node
    if isinstance(node, KomedaAxiom):
        how = f"Komeda {node.cert.semigroup}" + (" reflected" if node.reflect is not None else "")
    else:
        assert isinstance(node, LinkChainPiece)
        ch = node.chain
        how = f"chain of {len(ch)} links ({ch.two_links} two-links, {ch.one_links} one-links)"
    return [
        f"stage {i}: {shape_literal(s)}",
        f"  size {size}, cost {piece.upper}, difficulty bound {2 * piece.upper - size}",
        f"  via {how}",
        _indent(render_diagram(s)),
    ]


def four_stage(a: int = 9, b: int = 9) -> str:
    cert = main2_decomposition(a, b)
    pieces = cert.node.children
    out = [f"four-stage decomposition of {a} x {b} (ell = {cert.meta['ell']})", ""]
    for i, p in enumerate(pieces, start=1):
        out += _stage_lines(i, p) + [""]
    costs = ", ".join(str(p.upper) for p in pieces)
    out.append(f"stage costs: {costs}")
    out.append(f"total {cert.upper} <= floor(ab/2 + 2) = {(a * b + 4) // 2}")
    return "\n".join(out) + "\n"


def comparison() -> str:
    m2 = main2_upper(61, 61).upper
    asy = asy_upper(61, 61)
    verdict = "main2 stronger" if m2 < asy else "asyPrecise stronger" if asy < m2 else "tie"
    return f"a = b = 61\nmain2: {m2}, asyPrecise: {asy}, {verdict}\n"


def pareschi_crossover(lo: int = 45, hi: int = 55) -> str:
    out = [f"{'b':>4} {'d*':>4} {'tg4b':>5} {'2b+2':>5}  cmp"]
    for b in range(lo, hi + 1):
        bound, linear = base_tg_upper(4, b), 2 * b + 2
        cmp = ">" if bound > linear else "=" if bound == linear else "<"
        out.append(f"{b:>4} {pareschi_threshold(b):>4} {bound:>5} {linear:>5}  {cmp}")
    return "\n".join(out) + "\n"


def stage_one_semigroups(kmax: int = 8) -> str:
    out = []
    for k in range(1, kmax + 1):
        s = stage_one_semigroup(k)
        shape = komeda_shape(s, 2 * k)
        out.append(
            f"k={k}: {s} genus {s.genus} weight {s.weight} "
            f"primitive {str(is_primitive(s)).lower()} shape {shape.upper.exponent_form()}"
        )
    return "\n".join(out) + "\n"


TARGETS: dict[str, Callable[..., str]] = {
    "fig-disp": fig_disp,
    "tau-links": tau_links,
    "four-stage": four_stage,
    "comparison": comparison,
    "pareschi-crossover": pareschi_crossover,
    "stage-one-semigroups": stage_one_semigroups,
}


def report(target: str, a: Optional[int] = None, b: Optional[int] = None) -> str:
    if target not in TARGETS:
        raise KeyError(target)
    if target == "four-stage":
        return four_stage(a or 9, b or 9)
    return TARGETS[target]()


def golden_name(target: str, a: Optional[int] = None, b: Optional[int] = None) -> str:
    if target == "four-stage":
        return f"four-stage-{a or 9}x{b or 9}.txt"
    return f"{target}.txt"


def golden_text(name: str) -> Optional[str]:
    path = resources.files("skewgenus") / "golden" / name
    if not path.is_file():
        return None
    return path.read_text(encoding="utf-8")


def write_golden(name: str, text: str) -> Path:
    path = Path(str(resources.files("skewgenus"))) / "golden" / name
    path.write_text(text, encoding="utf-8")
    return path


def first_divergence(expected: str, got: str) -> Optional[tuple[int, str, str]]:
    """1-based line number and the two differing lines, or ``None`` if equal."""
    if expected == got:
        return None
    e, g = expected.splitlines(), got.splitlines()
    for i in range(max(len(e), len(g))):
        x = e[i] if i < len(e) else "<end of file>"
        y = g[i] if i < len(g) else "<end of file>"
        if x != y:
            return i + 1, x, y
    return len(e) + 1, "<trailing newline>", "<trailing newline>"

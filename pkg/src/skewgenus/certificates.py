"""Bound certificates: replayable decomposition trees for threshold genera.

Leaves are base-case formulas, closed-form bounds, verified link chains or
Komeda axiom instances; ``Split`` nodes apply subadditivity.  Only Komeda
leaves carry geometric (non-combinatorial) provenance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .chain import LinkChain, chain_from_steps
from .core import SkewShape, parse_ram_seq, parse_shape
from .displacement import LinkKind, LinkVerdict, parse_progression
from .semigroups import KomedaCertificate, komeda_shape, parse_semigroup

__all__ = [
    "BaseCase",
    "FormulaBound",
    "LinkChainPiece",
    "KomedaAxiom",
    "Split",
    "BoundCertificate",
    "Target",
    "canonical_json",
    "certificate_to_dict",
    "certificate_from_dict",
    "shape_literal",
]

Rect = tuple[int, int]
Target = Union[Rect, SkewShape]


@dataclass(frozen=True)
class BaseCase:
    """Known value for a thin rectangle; ``a, b`` are the formula's arguments."""

    id: str
    a: int
    b: int
    exact: bool = False


@dataclass(frozen=True)
class FormulaBound:
    id: str
    a: int
    b: int


@dataclass(frozen=True)
class LinkChainPiece:
    chain: LinkChain


@dataclass(frozen=True)
class KomedaAxiom:
    """``reflect`` set to ``n`` means the piece is the reflection of the Komeda shape."""

    cert: KomedaCertificate
    reflect: Optional[int] = None

    @property
    def shape(self) -> SkewShape:
        s = self.cert.shape
        if self.reflect is None:
            return s
        return SkewShape(s.upper.complement(self.reflect), s.lower.complement(self.reflect))


@dataclass(frozen=True)
class Split:
    """``rule`` is ``row`` (split ``a``), ``column`` (split ``b``), ``skew``, or
    ``transpose`` (a single child bounding the swapped rectangle)."""

    children: tuple[BoundCertificate, ...]
    rule: str


Node = Union[BaseCase, FormulaBound, LinkChainPiece, KomedaAxiom, Split]


@dataclass(frozen=True)
class BoundCertificate:
    target: Target
    upper: int
    lower: int
    node: Node
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def is_rectangle(self) -> bool:
        return isinstance(self.target, tuple)

    def walk(self):
        yield self
        if isinstance(self.node, Split):
            for child in self.node.children:
                yield from child.walk()


def shape_literal(s: SkewShape) -> str:
    return f"{s.upper.exponent_form()} / {s.lower.exponent_form()}"


def _verdict_to_dict(v: LinkVerdict) -> dict:
    return {"kind": v.kind.value, "progression": str(v.progression)}


def _node_to_dict(node: Node) -> dict:
    if isinstance(node, BaseCase):
        return {"type": "base", "id": node.id, "a": node.a, "b": node.b, "exact": node.exact}
    if isinstance(node, FormulaBound):
        return {"type": "formula", "id": node.id, "a": node.a, "b": node.b}
    if isinstance(node, LinkChainPiece):
        ch = node.chain
        return {
            "type": "chain",
            "steps": [s.exponent_form() for s in ch.steps],
            "verdicts": [_verdict_to_dict(v) for v in ch.verdicts],
            "ct": len(ch),
            "c_delta": ch.one_links,
        }
    if isinstance(node, KomedaAxiom):
        return {
            "type": "komeda",
            "semigroup": str(node.cert.semigroup),
            "rank": node.cert.rank,
            "tg": node.cert.tg_value,
            "reflect": node.reflect,
        }
    if isinstance(node, Split):
        return {
            "type": "split",
            "rule": node.rule,
            "children": [certificate_to_dict(c) for c in node.children],
        }
    raise TypeError(f"unknown node {node!r}")


def certificate_to_dict(cert: BoundCertificate) -> dict:
    if cert.is_rectangle:
        a, b = cert.target
        target: dict[str, Any] = {"a": a, "b": b}
    else:
        target = {"shape": shape_literal(cert.target)}
    out = {"target": target, "upper": cert.upper, "lower": cert.lower, "node": _node_to_dict(cert.node)}
    if cert.meta:
        out["meta"] = cert.meta
    return out


def canonical_json(obj: Any) -> str:
    """Byte-stable serialization: sorted keys, no insignificant whitespace."""
    if isinstance(obj, BoundCertificate):
        obj = certificate_to_dict(obj)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _node_from_dict(d: dict) -> Node:
    kind = d["type"]
    if kind == "base":
        return BaseCase(d["id"], d["a"], d["b"], d.get("exact", False))
    if kind == "formula":
        return FormulaBound(d["id"], d["a"], d["b"])
    if kind == "chain":
        chain = chain_from_steps(parse_ram_seq(s) for s in d["steps"])
        recorded = tuple(
            LinkVerdict(LinkKind(v["kind"]), parse_progression(v["progression"]))
            for v in d["verdicts"]
        )
        if recorded != chain.verdicts:
            raise ValueError("recorded chain verdicts disagree with replay")
        return LinkChainPiece(chain)
    if kind == "komeda":
        sg = parse_semigroup(d["semigroup"])
        cert = KomedaCertificate(sg, d["rank"], komeda_shape(sg, d["rank"]), d["tg"])
        return KomedaAxiom(cert, d.get("reflect"))
    if kind == "split":
        return Split(tuple(certificate_from_dict(c) for c in d["children"]), d["rule"])
    raise ValueError(f"unknown node type {kind!r}")


def certificate_from_dict(d: dict) -> BoundCertificate:
    t = d["target"]
    target: Target = (t["a"], t["b"]) if "a" in t else parse_shape(t["shape"])
    return BoundCertificate(target, d["upper"], d["lower"], _node_from_dict(d["node"]), d.get("meta", {}))

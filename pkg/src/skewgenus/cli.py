"""``skewgenus`` command line.

Exit status: 0 on success, 1 on domain errors (including golden mismatches),
2 on usage errors.  ``--json`` switches every command to JSON output and
``--budget N`` (or ``SKEWGENUS_BUDGET``) caps searches.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Optional, Sequence

from . import repro
from .bounds import (
    CertificateError,
    asy_upper,
    base_case_certificate,
    main2_upper,
    replay_certificate,
    tg_lower,
    tg_upper,
    exists_dimensionally_proper,
)
from .certificates import FormulaBound, BoundCertificate, canonical_json, certificate_to_dict, shape_literal
from .chain import LinkChain, chain_from_steps
from .core import parse_ram_seq, parse_shape, render_diagram, skew_size
from .difficulty import CorollaryKind, DifficultyError, build_corollary_chain, chain_threshold, tau
from .displacement import (
    classify_link,
    disp_down,
    disp_up,
    loose_set,
    parse_progression,
)
from .elliptic import elliptic_markings, elliptic_status
from .semigroups import gap_shift, is_primitive, komeda_shape, komeda_tg, parse_semigroup

__all__ = ["main", "run", "build_parser"]


def _literal(parse: Callable[[str], Any], what: str) -> Callable[[str], Any]:
    def convert(text: str) -> Any:
        try:
            return parse(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"invalid {what} {text!r}: {exc}") from None

    convert.__name__ = what
    return convert


SEQ = _literal(parse_ram_seq, "sequence")
SHAPE = _literal(parse_shape, "shape")
PROG = _literal(parse_progression, "progression")
SEMIGROUP = _literal(parse_semigroup, "semigroup")


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _chain_dict(ch: LinkChain) -> dict:
    return {
        "steps": [str(s) for s in ch.steps],
        "verdicts": [{"kind": v.kind.value, "progression": str(v.progression)} for v in ch.verdicts],
        "ct": len(ch),
        "c_delta": ch.one_links,
    }


def _chain_text(ch: LinkChain) -> str:
    lines = [str(ch.steps[0])]
    for s, v in zip(ch.steps[1:], ch.verdicts):
        lines.append(f"  -> {s}   [{v}]")
    return "\n".join(lines)


# -- command handlers: each returns (text, json-able object) ---------------

def cmd_disp(args) -> tuple[str, Any]:
    op = disp_up if args.direction == "up" else disp_down
    out = op(args.seq, args.progression)
    return str(out), {"result": list(out.entries)}


def cmd_loose(args) -> tuple[str, Any]:
    ls = sorted(loose_set(args.seq))
    return "{" + ",".join(map(str, ls)) + "}", {"loose": ls}


def cmd_link(args) -> tuple[str, Any]:
    v = classify_link(args.shape)
    prog = None if v.progression is None else str(v.progression)
    return str(v), {"kind": v.kind.value, "progression": prog, "size": skew_size(args.shape)}


def cmd_elliptic(args) -> tuple[str, Any]:
    if args.mode == "status":
        st = elliptic_status(args.shape, args.m)
        return st.value, {"status": st.value}
    p, q = elliptic_markings(args.gamma, args.progression)
    return f"p: {p}\nq: {q}", {"p": list(p.entries), "q": list(q.entries)}


def cmd_difficulty(args) -> tuple[str, Any]:
    res = chain_threshold(args.shape, args.budget)
    text = f"ct = {res.ct}, c_delta = {res.c_delta}\n{_chain_text(res.witness)}"
    if args.diagram:
        text += "\n" + render_diagram(args.shape)
    return text, {"ct": res.ct, "c_delta": res.c_delta, "witness": _chain_dict(res.witness)}


def cmd_tau(args) -> tuple[str, Any]:
    t = tau(args.n, args.a, args.b, args.c)
    return f"{t}  ({t.exponent_form()})", {"entries": list(t.entries), "exponent": t.exponent_form()}


def cmd_chain(args) -> tuple[str, Any]:
    if args.mode == "verify":
        ch = chain_from_steps(args.steps)
    else:
        kind = CorollaryKind(args.kind)
        params: dict[str, Any] = {"n": args.n}
        if kind is CorollaryKind.INCREASE_AC:
            if None in (args.a, args.b, args.c):
                raise ValueError("increase-ac needs --a, --b and --c")
            params.update(a=args.a, b=args.b, c=args.c)
        elif kind is CorollaryKind.FLOOR_CEIL:
            params["start"] = args.start
        ch = build_corollary_chain(kind, budget=args.budget, **params)
    summary = f"{len(ch)} links, c_delta {ch.one_links}"
    return f"{_chain_text(ch)}\n{summary}", _chain_dict(ch)


def cmd_semigroup(args) -> tuple[str, Any]:
    s = args.semigroup
    info: dict[str, Any] = {
        "gaps": list(s.gaps),
        "genus": s.genus,
        "weight": s.weight,
        "multiplicity": s.multiplicity,
        "primitive": is_primitive(s),
    }
    lines = [
        f"{s}",
        f"genus {s.genus}, weight {s.weight}, multiplicity {s.multiplicity}, "
        f"primitive {str(info['primitive']).lower()}",
    ]
    if args.rank is not None:
        shape = komeda_shape(s, args.rank)
        info["shape"] = shape_literal(shape)
        lines.append(f"shape (r={args.rank}): {shape_literal(shape)}")
        try:
            cert = komeda_tg(s, args.rank)
            info["komeda_tg"] = cert.tg_value
            lines.append(f"Komeda applies: tg = {cert.tg_value}")
        except ValueError as exc:
            info["komeda_tg"] = None
            lines.append(f"Komeda does not apply: {exc}")
    if args.shift:
        t = gap_shift(s)
        info["gap_shift"] = list(t.gaps)
        lines.append(f"gap shift: {t} (weight {t.weight})")
    return "\n".join(lines), info


def _tree_lines(cert: BoundCertificate, depth: int = 0) -> list[str]:
    pad = "  " * depth
    target = "%d x %d" % cert.target if cert.is_rectangle else shape_literal(cert.target)
    node = cert.node
    kind = type(node).__name__
    if hasattr(node, "id"):
        kind += f" {node.id}({node.a},{node.b})"
    elif hasattr(node, "rule"):
        kind += f" {node.rule}"
    out = [f"{pad}{target}: {cert.upper}  [{kind}]"]
    for child in getattr(node, "children", ()):
        out += _tree_lines(child, depth + 1)
    return out


def cmd_tg_bound(args) -> tuple[str, Any]:
    a, b = args.a, args.b
    if args.method == "best":
        cert = tg_upper(a, b, args.budget)
    elif args.method == "main2":
        cert = main2_upper(a, b, args.budget)
    elif args.method == "asy":
        cert = BoundCertificate((a, b), asy_upper(a, b), tg_lower(a, b), FormulaBound("asy-precise", a, b))
    else:
        if min(a, b) > 4:
            raise ValueError("base cases need a or b <= 4")
        cert = base_case_certificate(min(a, b), max(a, b))
    nodes = replay_certificate(cert)
    lines = [f"{cert.lower} <= tg({a} x {b}) <= {cert.upper}  ({args.method}; {nodes} nodes replayed)"]
    if args.tree:
        lines += _tree_lines(cert)
    return "\n".join(lines), certificate_to_dict(cert)


def cmd_exists(args) -> tuple[str, Any]:
    v = exists_dimensionally_proper(args.g, args.r, args.d, args.budget)
    text = str(v)
    obj: dict[str, Any] = {"verdict": v.kind.value, "a": v.a, "b": v.b}
    if v.certificate is not None:
        text += f" (a={v.a}, b={v.b}, tg <= {v.certificate.upper})"
        obj["certificate"] = certificate_to_dict(v.certificate)
    return text, obj


def cmd_repro(args) -> tuple[str, Any]:
    if args.target != "four-stage" and (args.a is not None or args.b is not None):
        raise ValueError("--a/--b only apply to four-stage")
    text = repro.report(args.target, args.a, args.b)
    name = repro.golden_name(args.target, args.a, args.b)
    if args.update:
        repro.write_golden(name, text)
        return text, {"target": args.target, "report": text, "golden": "written"}
    golden = repro.golden_text(name)
    status = "no golden file" if golden is None else "matches golden"
    if golden is not None:
        diff = repro.first_divergence(golden, text)
        if diff is not None:
            line, want, got = diff
            raise ReproMismatch(f"{name}: line {line} differs\n  golden: {want}\n  output: {got}")
    return text + f"[{status}: {name}]", {"target": args.target, "report": text, "golden": status}


class ReproMismatch(Exception):
    pass


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument(
        "--budget", type=_positive, default=argparse.SUPPRESS, help="search budget (overrides SKEWGENUS_BUDGET)"
    )

    p = argparse.ArgumentParser(prog="skewgenus", parents=[common], description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, handler, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(handler=handler)
        return sp

    sp = add("disp", cmd_disp, "displace a sequence along a progression")
    sp.add_argument("direction", choices=["up", "down"])
    sp.add_argument("seq", type=SEQ)
    sp.add_argument("progression", type=PROG)

    sp = add("loose", cmd_loose, "loose set of a sequence")
    sp.add_argument("seq", type=SEQ)

    sp = add("link", cmd_link, "classify a skew shape as a 1-link, 2-link or neither")
    sp.add_argument("shape", type=SHAPE, help='"upper / lower"')

    sp = add("elliptic", cmd_elliptic, "elliptic status or markings")
    esub = sp.add_subparsers(dest="mode", required=True)
    e1 = esub.add_parser("status", parents=[common])
    e1.add_argument("shape", type=SHAPE)
    e1.add_argument("m", type=int, help="torsion order (0 for nontorsion)")
    e2 = esub.add_parser("markings", parents=[common])
    e2.add_argument("gamma", type=SEQ)
    e2.add_argument("progression", type=PROG)

    sp = add("difficulty", cmd_difficulty, "chain threshold and displacement difficulty")
    sp.add_argument("shape", type=SHAPE)
    sp.add_argument("--diagram", action="store_true")

    sp = add("tau", cmd_tau, "the sequence 0^(n-a) 1^(a-b) 2^(b-c) 3^c")
    for name in ("n", "a", "b", "c"):
        sp.add_argument(name, type=int)

    sp = add("chain", cmd_chain, "verify or build a link chain")
    csub = sp.add_subparsers(dest="mode", required=True)
    c1 = csub.add_parser("verify", parents=[common])
    c1.add_argument("steps", type=SEQ, nargs="+")
    c2 = csub.add_parser("corollary", parents=[common])
    c2.add_argument("kind", choices=[k.value for k in CorollaryKind])
    c2.add_argument("n", type=int)
    c2.add_argument("--a", type=int)
    c2.add_argument("--b", type=int)
    c2.add_argument("--c", type=int)
    c2.add_argument("--start", choices=["floor", "ceil"], default="floor")

    sp = add("semigroup", cmd_semigroup, "numerical semigroup data and Komeda shape")
    sp.add_argument("semigroup", type=SEMIGROUP, help='e.g. "gaps:{1,2,5}"')
    sp.add_argument("--rank", type=int)
    sp.add_argument("--shift", action="store_true", help="also apply one gap shift")

    sp = add("tg-bound", cmd_tg_bound, "certified bounds on tg(a x b)")
    sp.add_argument("a", type=_positive)
    sp.add_argument("b", type=_positive)
    sp.add_argument("--method", choices=["best", "main2", "asy", "base"], default="best")
    sp.add_argument("--tree", action="store_true", help="print the certificate tree")

    sp = add("exists", cmd_exists, "existence verdict for dimensionally proper series")
    for name in ("g", "r", "d"):
        sp.add_argument(name, type=int)

    sp = add("repro", cmd_repro, "regenerate a worked example and diff it against its golden file")
    sp.add_argument("target", choices=list(repro.TARGETS))
    sp.add_argument("--a", type=_positive)
    sp.add_argument("--b", type=_positive)
    sp.add_argument("--update", action="store_true", help=argparse.SUPPRESS)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    args.budget = getattr(args, "budget", None)
    try:
        text, obj = args.handler(args)
    except ReproMismatch as exc:
        print(f"mismatch: {exc}", file=stderr)
        return 1
    except (ValueError, KeyError, DifficultyError, CertificateError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.json:
        print(canonical_json(obj), file=stdout)
    else:
        print(text, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

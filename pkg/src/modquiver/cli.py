"""Command line surface.

Commands:
    complexify  print the complexified quiver, its involution and projection
    check       run the two-sided gentle one-cycle equivalence check
    classify    print the derived-discreteness verdict
    normalize   rewrite a C-uniform one-cycle modulation and print the document
    oracle      run the fiber-counting oracle on one instance
    sweep       exhaustive verification over all small instances

Exit codes: 0 success or consistent, 1 predicate false or counterexample,
2 usage or parse error, 3 unsupported fragment.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath

from . import __version__
from .classify import ClassificationReport, check_equivalence, classify
from .complexify import SHEET_BAR, ComplexQuiver, build_gamma
from .errors import (
    EmptyQuiverError,
    ModQuiverError,
    NotOneCycleError,
    NotVUniformError,
    ParseError,
    UnsupportedBinomialError,
)
from .modulation import normalize_one_cycle
from .oracle import (
    SweepConfig,
    fiber_count_oracle,
    sweep_equivalence,
    sweep_fiber_counts,
    sweep_implications,
    sweep_structure,
)
from .textio import Document, build_instance, document_of, parse, serialize

_EXIT_OK = 0
_EXIT_FALSE = 1
_EXIT_USAGE = 2
_EXIT_UNSUPPORTED = 3


def _read_document(path: str) -> Document:
    if path == "-":
        return parse(sys.stdin.read())
    return parse(FsPath(path).read_text(encoding="utf-8"))


def _emit_json(payload: dict[str, object]) -> None:
    print(json.dumps(payload, indent=2))


def _gamma_flat(cq: ComplexQuiver) -> dict[str, object]:
    payload: dict[str, object] = {
        "gamma.vertex_count": len(cq.gamma.vertices),
        "gamma.arrow_count": len(cq.gamma.arrows),
    }
    for v in cq.gamma.vertices:
        payload[f"gamma.vertex.{v}"] = cq.sheet_vertex[v]
    for a in cq.gamma.arrows:
        payload[f"gamma.arrow.{a.name}"] = f"{a.source} {a.target} {cq.sheet_arrow[a.name]}"
    for v in cq.gamma.vertices:
        payload[f"tau.{v}"] = cq.tau_vertex[v]
    for a in cq.gamma.arrows:
        payload[f"tau.{a.name}"] = cq.tau_arrow[a.name]
    for v in cq.gamma.vertices:
        payload[f"pi.{v}"] = cq.pi_vertex[v]
    for a in cq.gamma.arrows:
        payload[f"pi.{a.name}"] = cq.pi_arrow[a.name]
    return payload


def render_gamma(cq: ComplexQuiver) -> str:
    gamma = cq.gamma
    lines = [f"gamma vertices ({len(gamma.vertices)}):"]
    for v in gamma.vertices:
        lines.append(f"  {v} {cq.sheet_vertex[v]}")
    lines.append(f"gamma arrows ({len(gamma.arrows)}):")
    for a in gamma.arrows:
        lines.append(f"  {a.name} : {a.source} -> {a.target} {cq.sheet_arrow[a.name]}")
    pairs = sorted(
        {tuple(sorted((x, y))) for x, y in cq.tau_vertex.items() if x != y}
        | {tuple(sorted((x, y))) for x, y in cq.tau_arrow.items() if x != y}
    )
    lines.append("tau pairs: " + (" ".join(f"{x}<->{y}" for x, y in pairs) or "none"))
    lines.append(
        "pi vertices: "
        + " ".join(f"{v}->{cq.pi_vertex[v]}" for v in gamma.vertices)
    )
    lines.append(
        "pi arrows: "
        + " ".join(f"{a.name}->{cq.pi_arrow[a.name]}" for a in gamma.arrows)
    )
    return "\n".join(lines) + "\n"


def render_dot(cq: ComplexQuiver) -> str:
    lines = ["digraph gamma {", "  rankdir=LR;"]
    for v in cq.gamma.vertices:
        style = ', style=dashed' if cq.sheet_vertex[v] == SHEET_BAR else ""
        lines.append(f'  "{v}" [shape=circle{style}];')
    for a in cq.gamma.arrows:
        style = ', style=dashed' if cq.sheet_arrow[a.name] == SHEET_BAR else ""
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_report(rep: ClassificationReport) -> str:
    def show(value: bool | None) -> str:
        return {True: "true", False: "false", None: "not evaluated"}[value]

    lines = [f"real side: {show(rep.real.holds)}", f"  {rep.real.witness}"]
    lines.append(
        f"complex side: {show(rep.complex_value)} "
        f"({len(rep.components)} component{'s' if len(rep.components) != 1 else ''})"
    )
    for i, comp in enumerate(rep.components):
        lines.append(f"  component {i} [{' '.join(comp.vertices)}]: {show(comp.result.holds)}")
        lines.append(f"    {comp.result.witness}")
    lines.append(f"consistent: {show(rep.consistent)}")
    lines.append(f"verdict: {rep.verdict}")
    if rep.dynkin:
        lines.append(f"valued graph type: {rep.dynkin}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _cmd_complexify(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    q, m, _ = build_instance(doc)
    cq = build_gamma(q, m)
    if args.json:
        _emit_json(_gamma_flat(cq))
    else:
        sys.stdout.write(render_gamma(cq))
    if args.dot:
        FsPath(args.dot).write_text(render_dot(cq), encoding="utf-8")
    return _EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    q, m, rels = build_instance(doc)
    rep = check_equivalence(q, m, rels)
    if args.json:
        _emit_json(rep.to_flat_dict())
    else:
        sys.stdout.write(render_report(rep))
    if rep.consistent is True:
        return _EXIT_OK
    if rep.consistent is False:
        return _EXIT_FALSE
    return _EXIT_UNSUPPORTED


def _cmd_classify(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    q, m, rels = build_instance(doc)
    rep = classify(q, m, rels)
    if args.json:
        _emit_json(rep.to_flat_dict())
    else:
        sys.stdout.write(render_report(rep))
    return _EXIT_OK


def _cmd_normalize(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    q, m, rels = build_instance(doc)
    rewritten = normalize_one_cycle(q, m)
    out = document_of(q, rewritten, rels, name=doc.name)
    sys.stdout.write(serialize(out))
    return _EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    q, m, _ = build_instance(doc)
    mismatch = fiber_count_oracle(q, m, args.max_len)
    if args.json:
        payload: dict[str, object] = {"max_len": args.max_len, "ok": mismatch is None}
        if mismatch:
            payload["path"] = str(mismatch.path)
            payload["fibers"] = mismatch.fibers
            payload["expected"] = mismatch.expected
        _emit_json(payload)
    elif mismatch is None:
        print(f"fiber counts match bimodule dimensions up to length {args.max_len}")
    else:
        print(
            f"mismatch: path {mismatch.path} has {mismatch.fibers} fibers, "
            f"dimension {mismatch.expected}"
        )
    return _EXIT_OK if mismatch is None else _EXIT_FALSE


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        max_vertices=args.max_vertices,
        max_arrows=args.max_arrows,
        max_path_len=args.max_len,
        uniform_only=not args.all_modulations,
        include_omega=not args.monomials_only,
    )
    reports = {
        "equivalence": sweep_equivalence(cfg),
        "fiber_counts": sweep_fiber_counts(cfg),
        "structure": sweep_structure(cfg),
        "implications": sweep_implications(cfg),
    }
    failed = False
    payload: dict[str, object] = {}
    for label, rep in reports.items():
        payload[f"{label}.quivers"] = rep.quivers
        payload[f"{label}.modulations"] = rep.modulations
        payload[f"{label}.instances"] = rep.instances
        payload[f"{label}.ok"] = rep.ok
        payload[f"{label}.elapsed"] = round(rep.elapsed, 3)
        undecided = rep.counts.get("undecided", 0)
        if undecided:
            payload[f"{label}.undecided"] = undecided
        if not args.json:
            extra = f", {undecided} outside the supported fragment" if undecided else ""
            print(
                f"{label}: {'ok' if rep.ok else 'FAILED'} "
                f"({rep.quivers} quivers, {rep.modulations} modulations, "
                f"{rep.instances} instances{extra}, {rep.elapsed:.2f}s)"
            )
        if rep.failure:
            failed = True
            payload[f"{label}.failure"] = rep.failure.detail
            payload[f"{label}.counterexample"] = rep.failure.document
            if not args.json:
                print(f"  {rep.failure.family}: {rep.failure.detail}")
                print("  counterexample document:")
                for line in rep.failure.document.splitlines():
                    print(f"    {line}")
    if args.json:
        _emit_json(payload)
    return _EXIT_FALSE if failed else _EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modquiver",
        description="Real modulated quivers and their complexified presentations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="input document, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine readable output")

    p = sub.add_parser("complexify", help="construct the complexified quiver")
    add_file(p)
    p.add_argument("--dot", metavar="FILE", help="also write a DOT rendering")
    p.set_defaults(func=_cmd_complexify)

    p = sub.add_parser("check", help="two-sided equivalence check")
    add_file(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("classify", help="derived-discreteness verdict")
    add_file(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("normalize", help="normalize a C-uniform one-cycle modulation")
    p.add_argument("file", help="input document, or - for stdin")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("oracle", help="fiber-counting oracle on one instance")
    add_file(p)
    p.add_argument("--max-len", type=int, default=4, help="path length bound")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("sweep", help="exhaustive verification sweeps")
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.add_argument("--max-vertices", type=int, default=2)
    p.add_argument("--max-arrows", type=int, default=3)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument(
        "--all-modulations",
        action="store_true",
        help="enumerate mixed modulations too (default vertex-uniform only)",
    )
    p.add_argument(
        "--monomials-only",
        action="store_true",
        help="skip the cycle-detour binomial instances",
    )
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else _EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except (
        EmptyQuiverError,
        NotOneCycleError,
        NotVUniformError,
        UnsupportedBinomialError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_UNSUPPORTED
    except ModQuiverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())

"""The line-oriented input format and its serializer.

Grammar, one declaration per line:

    # comment
    name <free text>
    vertex <id> : <R|C|H>
    arrow <id> : <src> -> <dst> [conj]
    rel <path>
    rel <path> - (<real|complex|central|noncentral>) <path>

A path literal lists arrows in composition order, ``*`` meaning
"after": ``g*b*a`` traverses ``a``, then ``b``, then ``g``. Identifiers
are words of letters, digits and underscores; arrows must be declared
after their endpoints and relations after their arrows. Everything
after ``#`` is a comment.

``parse`` and ``serialize`` are mutually inverse on documents:
``parse(serialize(doc)) == doc``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .modulation import Modulation, Ring, validate
from .quiver import Path, Quiver, path_of
from .relations import Binomial, RelationSet, ScalarClass

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_VERTEX_LINE = re.compile(r"vertex\s+(\S+)\s*:\s*(\S+)\s*\Z")
_ARROW_LINE = re.compile(r"arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*(conj)?\s*\Z")
_REL_BINOMIAL = re.compile(r"rel\s+(\S+)\s+-\s+\(\s*(\w+)\s*\)\s+(\S+)\s*\Z")
_REL_MONOMIAL = re.compile(r"rel\s+(\S+)\s*\Z")


@dataclass(frozen=True)
class VertexDecl:
    name: str
    ring: Ring


@dataclass(frozen=True)
class ArrowDecl:
    name: str
    source: str
    target: str
    conj: bool = False


@dataclass(frozen=True)
class RelationDecl:
    """A relation line; paths are stored in composition order."""

    left: tuple[str, ...]
    scalar: ScalarClass | None = None
    right: tuple[str, ...] | None = None


@dataclass(frozen=True)
class Document:
    name: str | None = None
    comments: tuple[str, ...] = ()
    vertices: tuple[VertexDecl, ...] = ()
    arrows: tuple[ArrowDecl, ...] = ()
    relations: tuple[RelationDecl, ...] = ()


def _column(line: str, token: str) -> int:
    pos = line.find(token)
    return pos + 1 if pos >= 0 else 1


def parse(text: str) -> Document:
    """Parse and semantically validate a document; raises ParseError."""
    name: str | None = None
    comments: list[str] = []
    vertices: list[VertexDecl] = []
    arrows: list[ArrowDecl] = []
    relations: list[RelationDecl] = []
    rings: dict[str, Ring] = {}
    arrow_of: dict[str, ArrowDecl] = {}

    def parse_path(tokens: str, lineno: int, line: str) -> tuple[str, ...]:
        names = tuple(tokens.split("*"))
        for n in names:
            if not _IDENT.match(n):
                raise ParseError(lineno, _column(line, n or tokens), f"bad arrow identifier {n!r}")
            if n not in arrow_of:
                raise ParseError(lineno, _column(line, n), f"unknown arrow {n!r}")
        if len(names) < 2:
            raise ParseError(
                lineno, _column(line, tokens), "relation paths need length at least two"
            )
        # names are composition order; traversal runs right to left
        for later, earlier in zip(names, names[1:]):
            if arrow_of[earlier].target != arrow_of[later].source:
                raise ParseError(
                    lineno,
                    _column(line, later),
                    f"arrows {earlier!r} and {later!r} do not compose",
                )
        return names

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw
        if "#" in line:
            head, _, tail = line.partition("#")
            if not head.strip():
                comments.append(tail.strip())
            line = head
        line = line.strip()
        if not line:
            continue
        keyword = line.split(None, 1)[0]
        if keyword == "name":
            if name is not None:
                raise ParseError(lineno, 1, "duplicate name declaration")
            rest = line[len("name") :].strip()
            if not rest:
                raise ParseError(lineno, 1, "empty name declaration")
            name = rest
        elif keyword == "vertex":
            match = _VERTEX_LINE.match(line)
            if not match:
                raise ParseError(lineno, 1, "expected: vertex <id> : <R|C|H>")
            ident, ring_label = match.groups()
            if not _IDENT.match(ident):
                raise ParseError(lineno, _column(raw, ident), f"bad vertex identifier {ident!r}")
            if ident in rings:
                raise ParseError(lineno, _column(raw, ident), f"duplicate vertex {ident!r}")
            try:
                ring = Ring(ring_label)
            except ValueError:
                raise ParseError(
                    lineno, _column(raw, ring_label), f"unknown ring label {ring_label!r}"
                ) from None
            rings[ident] = ring
            vertices.append(VertexDecl(ident, ring))
        elif keyword == "arrow":
            match = _ARROW_LINE.match(line)
            if not match:
                raise ParseError(lineno, 1, "expected: arrow <id> : <src> -> <dst> [conj]")
            ident, src, dst, conj = match.groups()
            if not _IDENT.match(ident):
                raise ParseError(lineno, _column(raw, ident), f"bad arrow identifier {ident!r}")
            if ident in arrow_of:
                raise ParseError(lineno, _column(raw, ident), f"duplicate arrow {ident!r}")
            for endpoint in (src, dst):
                if endpoint not in rings:
                    raise ParseError(
                        lineno, _column(raw, endpoint), f"unknown vertex {endpoint!r}"
                    )
            if conj and not (rings[src] is Ring.C and rings[dst] is Ring.C):
                raise ParseError(
                    lineno, _column(raw, "conj"), "conj requires C-C endpoints"
                )
            decl = ArrowDecl(ident, src, dst, bool(conj))
            arrow_of[ident] = decl
            arrows.append(decl)
        elif keyword == "rel":
            match = _REL_BINOMIAL.match(line)
            if match:
                left_text, scalar_label, right_text = match.groups()
                try:
                    scalar = ScalarClass(scalar_label)
                except ValueError:
                    raise ParseError(
                        lineno,
                        _column(raw, scalar_label),
                        f"unknown scalar class {scalar_label!r}",
                    ) from None
                left = parse_path(left_text, lineno, raw)
                right = parse_path(right_text, lineno, raw)
                ends = lambda p: (arrow_of[p[-1]].source, arrow_of[p[0]].target)
                if ends(left) != ends(right):
                    raise ParseError(
                        lineno, _column(raw, right_text), "binomial paths must share endpoints"
                    )
                if left == right:
                    raise ParseError(
                        lineno, _column(raw, right_text), "binomial paths must differ"
                    )
                relations.append(RelationDecl(left, scalar, right))
            else:
                match = _REL_MONOMIAL.match(line)
                if not match:
                    raise ParseError(
                        lineno, 1, "expected: rel <path> or rel <path> - (<class>) <path>"
                    )
                relations.append(RelationDecl(parse_path(match.group(1), lineno, raw)))
        else:
            raise ParseError(lineno, _column(raw, keyword), f"unknown declaration {keyword!r}")

    return Document(name, tuple(comments), tuple(vertices), tuple(arrows), tuple(relations))


def serialize(doc: Document) -> str:
    """Render a document back to text; inverse to ``parse``."""
    lines: list[str] = []
    for comment in doc.comments:
        lines.append(f"# {comment}" if comment else "#")
    if doc.name is not None:
        lines.append(f"name {doc.name}")
    for v in doc.vertices:
        lines.append(f"vertex {v.name} : {v.ring.value}")
    for a in doc.arrows:
        suffix = " conj" if a.conj else ""
        lines.append(f"arrow {a.name} : {a.source} -> {a.target}{suffix}")
    for r in doc.relations:
        if r.scalar is None:
            lines.append(f"rel {'*'.join(r.left)}")
        else:
            assert r.right is not None
            lines.append(
                f"rel {'*'.join(r.left)} - ({r.scalar.value}) {'*'.join(r.right)}"
            )
    return "\n".join(lines) + "\n"


def build_instance(doc: Document) -> tuple[Quiver, Modulation, RelationSet]:
    """Materialize the parsed declarations; parse already validated them."""
    q = Quiver.build(
        [v.name for v in doc.vertices],
        [(a.name, a.source, a.target) for a in doc.arrows],
    )
    m = Modulation(
        {v.name: v.ring for v in doc.vertices},
        frozenset(a.name for a in doc.arrows if a.conj),
    )
    problems = validate(q, m)
    assert not problems, problems
    monomials: set[Path] = set()
    binomials: set[Binomial] = set()
    for decl in doc.relations:
        left = path_of(q, tuple(reversed(decl.left)))
        if decl.scalar is None:
            monomials.add(left)
        else:
            assert decl.right is not None
            right = path_of(q, tuple(reversed(decl.right)))
            binomials.add(Binomial(left, right, decl.scalar))
    return q, m, RelationSet(frozenset(monomials), frozenset(binomials))


def document_of(
    q: Quiver,
    m: Modulation,
    rels: RelationSet,
    name: str | None = None,
    comments: tuple[str, ...] = (),
) -> Document:
    """A canonical document for an instance: everything sorted."""
    vertices = tuple(VertexDecl(v, m.ring(v)) for v in q.vertices)
    arrows = tuple(
        ArrowDecl(a.name, a.source, a.target, m.is_conj(a.name)) for a in q.arrows
    )
    decls: list[RelationDecl] = []
    for p in sorted(rels.monomials, key=lambda p: (len(p), p.arrows)):
        decls.append(RelationDecl(tuple(reversed(p.arrows))))
    for b in sorted(
        rels.binomials, key=lambda b: (b.left.arrows, b.right.arrows, b.scalar.value)
    ):
        decls.append(
            RelationDecl(
                tuple(reversed(b.left.arrows)),
                b.scalar,
                tuple(reversed(b.right.arrows)),
            )
        )
    return Document(name, comments, vertices, arrows, tuple(decls))

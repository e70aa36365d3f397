"""Complexified quiver presentations: the doubled quiver, its sheet
involution, the projection back to the base, and ideal transport.

Complexifying a modulated quiver doubles every C vertex into a plain and
a bar copy and lifts each arrow according to its bimodule kind:

    target R/H, source R/H, same ring   one arrow   i  -> j
    target R/H, source C                a: i -> j   a~: i~ -> j
    target C,   source R/H              a: i -> j   a~: i  -> j~
    target/source {R, H}, mixed         a: i -> j   a~: i  -> j   (parallel)
    C-C plain                           a: i -> j   a~: i~ -> j~
    C-C conjugated                      a: i~ -> j  a~: i  -> j~

Bar copies carry the reserved ``~`` suffix. Swapping the sheets is an
involution tau; collapsing tau orbits recovers the base quiver, and that
projection is pi.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidModulationError,
    NotVUniformError,
    UnsupportedBinomialError,
)
from .modulation import Modulation, Ring, is_v_uniform, validate
from .quiver import Arrow, Chain, Direction, Path, Quiver
from .relations import Binomial, RelationSet, check_scalar_over, match_omega

BAR = "~"
SHEET_PLAIN = "plain"
SHEET_BAR = "bar"


def bar_name(name: str) -> str:
    return name + BAR


@dataclass(frozen=True)
class ComplexQuiver:
    """The complexified quiver together with its bookkeeping maps.

    ``tau_*`` are the sheet involutions, ``pi_*`` project back onto the
    base quiver, and ``sheet_*`` tag every item plain or bar.
    """

    gamma: Quiver
    tau_vertex: dict[str, str]
    tau_arrow: dict[str, str]
    pi_vertex: dict[str, str]
    pi_arrow: dict[str, str]
    sheet_vertex: dict[str, str]
    sheet_arrow: dict[str, str]
    vertex_fibers: dict[str, tuple[str, ...]]
    arrow_fibers: dict[str, tuple[str, ...]]

    def tau_of_path(self, p: Path) -> Path:
        names = tuple(self.tau_arrow[n] for n in p.arrows)
        return Path(names, self.tau_vertex[p.start], self.tau_vertex[p.end])


ComplexQuiver.__hash__ = None  # type: ignore[assignment]


def build_gamma(q: Quiver, m: Modulation) -> ComplexQuiver:
    """Construct the complexified quiver of a modulated quiver."""
    problems = validate(q, m)
    if problems:
        raise InvalidModulationError("; ".join(problems))
    for name in list(q.vertices) + [a.name for a in q.arrows]:
        if name.endswith(BAR):
            raise ValueError(
                f"identifier {name!r} ends with the reserved sheet suffix {BAR!r}"
            )

    vertices: list[str] = []
    tau_v: dict[str, str] = {}
    pi_v: dict[str, str] = {}
    sheet_v: dict[str, str] = {}
    v_fibers: dict[str, tuple[str, ...]] = {}
    for v in q.vertices:
        if m.ring(v) is Ring.C:
            vb = bar_name(v)
            vertices += [v, vb]
            tau_v[v], tau_v[vb] = vb, v
            pi_v[v] = pi_v[vb] = v
            sheet_v[v], sheet_v[vb] = SHEET_PLAIN, SHEET_BAR
            v_fibers[v] = (v, vb)
        else:
            vertices.append(v)
            tau_v[v] = v
            pi_v[v] = v
            sheet_v[v] = SHEET_PLAIN
            v_fibers[v] = (v,)

    arrows: list[Arrow] = []
    tau_a: dict[str, str] = {}
    pi_a: dict[str, str] = {}
    sheet_a: dict[str, str] = {}
    a_fibers: dict[str, tuple[str, ...]] = {}
    for a in q.arrows:
        kind = m.kind_of(a)
        t, s = kind.target, kind.source
        ab = bar_name(a.name)
        if kind.fiber_multiplicity == 1:
            lifts = [(a.name, a.source, a.target)]
        elif s is Ring.C and t in (Ring.R, Ring.H):
            lifts = [(a.name, a.source, a.target), (ab, bar_name(a.source), a.target)]
        elif t is Ring.C and s in (Ring.R, Ring.H):
            lifts = [(a.name, a.source, a.target), (ab, a.source, bar_name(a.target))]
        elif {t, s} == {Ring.R, Ring.H}:
            lifts = [(a.name, a.source, a.target), (ab, a.source, a.target)]
        elif not kind.conj:
            lifts = [
                (a.name, a.source, a.target),
                (ab, bar_name(a.source), bar_name(a.target)),
            ]
        else:
            lifts = [
                (a.name, bar_name(a.source), a.target),
                (ab, a.source, bar_name(a.target)),
            ]
        for name, src, dst in lifts:
            arrows.append(Arrow(name, src, dst))
            pi_a[name] = a.name
            sheet_a[name] = SHEET_BAR if name.endswith(BAR) else SHEET_PLAIN
        if len(lifts) == 1:
            tau_a[a.name] = a.name
            a_fibers[a.name] = (a.name,)
        else:
            tau_a[a.name], tau_a[ab] = ab, a.name
            a_fibers[a.name] = (a.name, ab)

    gamma = Quiver(tuple(vertices), tuple(arrows))
    return ComplexQuiver(
        gamma, tau_v, tau_a, pi_v, pi_a, sheet_v, sheet_a, v_fibers, a_fibers
    )


def orbit_quiver(cq: ComplexQuiver) -> Quiver:
    """Collapse the sheet involution; the result equals the base quiver."""
    vertices = sorted(set(cq.pi_vertex.values()))
    arrows = []
    for base, fibers in cq.arrow_fibers.items():
        rep = cq.gamma.arrow(fibers[0])
        arrows.append(Arrow(base, cq.pi_vertex[rep.source], cq.pi_vertex[rep.target]))
    return Quiver(tuple(vertices), tuple(arrows))


def fibers_of_path(cq: ComplexQuiver, p: Path) -> list[Path]:
    """All paths of the complexified quiver lying over a base path."""
    gamma = cq.gamma
    partial: list[tuple[str, ...]] = [()]
    for base_name in p.arrows:
        grown: list[tuple[str, ...]] = []
        for prefix in partial:
            for lift in cq.arrow_fibers[base_name]:
                if prefix and gamma.arrow(lift).source != gamma.arrow(prefix[-1]).target:
                    continue
                grown.append(prefix + (lift,))
        partial = grown
    result = []
    for names in partial:
        first = gamma.arrow(names[0])
        last = gamma.arrow(names[-1])
        result.append(Path(names, first.source, last.target))
    return result


def fibers_of_chain(cq: ComplexQuiver, c: Chain) -> list[Chain]:
    """All chains of the complexified quiver lying over a base chain."""
    gamma = cq.gamma

    def endpoints(name: str, direction: Direction) -> tuple[str, str]:
        a = gamma.arrow(name)
        if direction is Direction.FORWARD:
            return a.source, a.target
        return a.target, a.source

    partial: list[tuple[tuple[str, ...], str, str]] = []
    first_base, first_dir = c.steps[0]
    for lift in cq.arrow_fibers[first_base]:
        entry, exit_ = endpoints(lift, first_dir)
        partial.append(((lift,), entry, exit_))
    for base_name, direction in c.steps[1:]:
        grown = []
        for names, start, at in partial:
            for lift in cq.arrow_fibers[base_name]:
                entry, exit_ = endpoints(lift, direction)
                if entry == at:
                    grown.append((names + (lift,), start, exit_))
        partial = grown
    dirs = tuple(d for _, d in c.steps)
    return [
        Chain(tuple(zip(names, dirs)), start, end) for names, start, end in partial
    ]


def transport_ideal(
    q: Quiver, m: Modulation, rels: RelationSet, cq: ComplexQuiver
) -> RelationSet:
    """Carry an admissible relation set over to the complexified quiver.

    Monomial generators go to the full set of their fibers. A single
    binomial generator in the cycle-detour shape is supported over R- and
    H-uniform modulations: with a central scalar it transports to the one
    fiber binomial, with a noncentral quaternion scalar its two paths
    enter separately as monomials. Everything else raises, because no
    sound combinatorial rule exists for it.

    The empty relation set transports to the empty set for any modulation.
    """
    if not rels.monomials and not rels.binomials:
        return RelationSet.empty()
    ring = is_v_uniform(q, m)
    if ring is None:
        raise NotVUniformError(
            "ideal transport is undefined for mixed vertex rings"
        )
    monomials: set[Path] = set()
    for p in rels.monomials:
        monomials.update(fibers_of_path(cq, p))
    binomials: set[Binomial] = set()
    if rels.binomials:
        if ring is Ring.C:
            raise UnsupportedBinomialError(
                "binomial transport over a C-uniform modulation is undefined"
            )
        if len(rels.binomials) > 1:
            raise UnsupportedBinomialError("at most one binomial generator is supported")
        b = next(iter(rels.binomials))
        check_scalar_over(ring, b.scalar)
        if match_omega(q, b, rels.monomials) is None:
            raise UnsupportedBinomialError(
                "binomial generator is not in the supported cycle-detour shape"
            )
        # gamma equals the base quiver here, so each side has a unique fiber
        left = fibers_of_path(cq, b.left)
        right = fibers_of_path(cq, b.right)
        assert len(left) == 1 and len(right) == 1
        if b.scalar.central_over(ring):
            binomials.add(Binomial(left[0], right[0], b.scalar))
        else:
            monomials.add(left[0])
            monomials.add(right[0])
    return RelationSet(frozenset(monomials), frozenset(binomials))

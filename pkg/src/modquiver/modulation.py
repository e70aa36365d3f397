"""Division-ring labels, simple bimodule kinds, and modulation rewriting.

A modulation assigns one of the real division rings R, C, H to every
vertex and a simple bimodule to every arrow. For every ordered pair of
rings except (C, C) there is exactly one simple bimodule, so an arrow's
kind is determined by its endpoints; arrows between two C vertices
additionally choose between the plain and the conjugated bimodule.

Real dimensions of the simple bimodules, by (target ring, source ring):

    (R,R) 1   (R,C) 2   (R,H) 4
    (C,R) 2   (C,C) 2   (C,H) 4      (C,C) twice: plain and conjugated
    (H,R) 4   (H,C) 4   (H,H) 4
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import (
    LoopAtVertexError,
    NotOneCycleError,
    NotVUniformCError,
)
from .quiver import Arrow, Path, Quiver, find_cycle, is_one_cycle


class Ring(Enum):
    R = "R"
    C = "C"
    H = "H"

    @property
    def real_dim(self) -> int:
        return _RING_DIM[self]

    @property
    def fiber_factor(self) -> int:
        """Vertex idempotent truncation factor: 2 for H, else 1."""
        return 2 if self is Ring.H else 1


_RING_DIM = {Ring.R: 1, Ring.C: 2, Ring.H: 4}

_KIND_DIM: dict[tuple[Ring, Ring], int] = {
    (Ring.R, Ring.R): 1,
    (Ring.R, Ring.C): 2,
    (Ring.C, Ring.R): 2,
    (Ring.R, Ring.H): 4,
    (Ring.H, Ring.R): 4,
    (Ring.H, Ring.H): 4,
    (Ring.H, Ring.C): 4,
    (Ring.C, Ring.H): 4,
    (Ring.C, Ring.C): 2,
}


@dataclass(frozen=True)
class BimoduleKind:
    """A simple bimodule over a (target, source) pair of real division rings."""

    target: Ring
    source: Ring
    conj: bool = False

    def __post_init__(self) -> None:
        if self.conj and not (self.target is Ring.C and self.source is Ring.C):
            raise ValueError("conjugated kind requires C at both endpoints")

    @property
    def real_dim(self) -> int:
        return _KIND_DIM[(self.target, self.source)]

    @property
    def fiber_multiplicity(self) -> int:
        """How many arrows of the complexified quiver lie over one arrow."""
        if self.target is self.source and self.target in (Ring.R, Ring.H):
            return 1
        return 2


CATALOG: tuple[BimoduleKind, ...] = tuple(
    BimoduleKind(t, s, c)
    for t in Ring
    for s in Ring
    for c in ((False, True) if (t is Ring.C and s is Ring.C) else (False,))
)


@dataclass(frozen=True, eq=True)
class Modulation:
    """Vertex rings plus the set of arrows carrying the conjugated C-C kind.

    Treat instances as read-only; operations return fresh values.
    """

    vertex_ring: dict[str, Ring]
    conj_arrows: frozenset[str] = frozenset()

    def ring(self, v: str) -> Ring:
        return self.vertex_ring[v]

    def is_conj(self, arrow_name: str) -> bool:
        return arrow_name in self.conj_arrows

    def kind_of(self, arrow: Arrow) -> BimoduleKind:
        return BimoduleKind(
            self.vertex_ring[arrow.target],
            self.vertex_ring[arrow.source],
            arrow.name in self.conj_arrows,
        )

    @classmethod
    def uniform(cls, q: Quiver, ring: Ring, conj: Iterable[str] = ()) -> "Modulation":
        return cls({v: ring for v in q.vertices}, frozenset(conj))


# Modulation contains a dict, so never hash it.
Modulation.__hash__ = None  # type: ignore[assignment]


def validate(q: Quiver, m: Modulation) -> list[str]:
    """All catalog violations, as human-readable strings. Empty means valid."""
    problems: list[str] = []
    vs = set(q.vertices)
    for v in q.vertices:
        if v not in m.vertex_ring:
            problems.append(f"vertex {v!r} has no ring assigned")
    for v in m.vertex_ring:
        if v not in vs:
            problems.append(f"ring assigned to unknown vertex {v!r}")
    arrow_names = {a.name for a in q.arrows}
    for name in sorted(m.conj_arrows):
        if name not in arrow_names:
            problems.append(f"conjugation tag on unknown arrow {name!r}")
    for a in q.arrows:
        if a.source not in m.vertex_ring or a.target not in m.vertex_ring:
            continue
        if m.is_conj(a.name) and not (
            m.ring(a.source) is Ring.C and m.ring(a.target) is Ring.C
        ):
            problems.append(
                f"arrow {a.name!r}: conjugated kind requires C-C endpoints"
            )
    return problems


def is_v_uniform(q: Quiver, m: Modulation) -> Ring | None:
    """The common vertex ring, or ``None`` for mixed modulations.

    The empty quiver is vacuously uniform but has no witness ring, so it
    also returns ``None``; callers that care must check emptiness first.
    """
    rings = {m.ring(v) for v in q.vertices}
    if len(rings) == 1:
        return rings.pop()
    return None


def path_real_dim(q: Quiver, m: Modulation, p: Path) -> int:
    """Real dimension of the bimodule attached to a path.

    Tensoring over a division ring divides dimensions: crossing an interior
    vertex with ring D contributes a factor 1/dim(D).
    """
    total = Fraction(m.kind_of(q.arrow(p.arrows[0])).real_dim)
    for name in p.arrows[1:]:
        arrow = q.arrow(name)
        total *= Fraction(m.kind_of(arrow).real_dim, m.ring(arrow.source).real_dim)
    assert total.denominator == 1
    return int(total)


def flip_at_vertex(q: Quiver, m: Modulation, v: str) -> Modulation:
    """Swap plain and conjugated kinds on every arrow incident to ``v``.

    Defined for complex vertex-uniform modulations at loop-free vertices;
    it is an involution and preserves the algebra up to isomorphism.
    """
    if is_v_uniform(q, m) is not Ring.C:
        raise NotVUniformCError("conjugation flips need a C vertex-uniform modulation")
    if v not in set(q.vertices):
        raise ValueError(f"unknown vertex {v!r}")
    if any(a.target == v for a in q.out_arrows(v)):
        raise LoopAtVertexError(f"vertex {v!r} carries a loop")
    incident = {a.name for a in q.out_arrows(v)} | {a.name for a in q.in_arrows(v)}
    return Modulation(dict(m.vertex_ring), m.conj_arrows ^ frozenset(incident))


def normalize_one_cycle(q: Quiver, m: Modulation) -> Modulation:
    """Concentrate conjugated arrows per the cycle parity; see the stepped variant."""
    return normalize_one_cycle_steps(q, m)[0]


def normalize_one_cycle_steps(
    q: Quiver, m: Modulation
) -> tuple[Modulation, tuple[str, ...]]:
    """Normalize a C-uniform one-cycle modulation by a sequence of flips.

    If the number of conjugated arrows on the cycle is even, the result has
    no conjugated arrow at all. If it is odd, exactly one survives, on the
    smallest-named cycle arrow. Tree arrows always end up plain.

    Returns the new modulation together with the flipped vertices in order,
    so the rewrite can be replayed.
    """
    if is_v_uniform(q, m) is not Ring.C:
        raise NotVUniformCError("normalization needs a C vertex-uniform modulation")
    if not is_one_cycle(q):
        raise NotOneCycleError("normalization needs a one-cycle quiver")
    cycle = find_cycle(q)
    assert cycle is not None

    current = m
    flips: list[str] = []

    def flip(v: str) -> None:
        nonlocal current
        current = flip_at_vertex(q, current, v)
        flips.append(v)

    steps = cycle.chain.steps
    verts = cycle.vertices
    length = len(steps)

    if length > 1:
        # merge conjugated cycle arrows pairwise: flipping the vertices
        # strictly between two of them slides one onto the other
        while True:
            positions = [
                i for i, (name, _) in enumerate(steps) if current.is_conj(name)
            ]
            if len(positions) < 2:
                break
            first, second = positions[0], positions[1]
            for k in range(first + 1, second + 1):
                flip(verts[k])
        # park a lone survivor on the smallest-named cycle arrow
        positions = [i for i, (name, _) in enumerate(steps) if current.is_conj(name)]
        if positions:
            target = min(range(length), key=lambda i: steps[i][0])
            i = positions[0]
            while i != target:
                flip(verts[(i + 1) % length])
                i = (i + 1) % length

    # push conjugated tree arrows outward, one distance layer at a time
    distance: dict[str, int] = {v: 0 for v in cycle.vertices}
    frontier = sorted(set(cycle.vertices))
    d = 0
    while frontier:
        nxt: set[str] = set()
        for v in frontier:
            for w in q._neighbors[v]:
                if w not in distance:
                    distance[w] = d + 1
                    nxt.add(w)
        d += 1
        layer = sorted(nxt)
        for v in layer:
            parents = [
                a
                for a in q.in_arrows(v) + q.out_arrows(v)
                if (a.source if a.target == v else a.target) != v
                and distance.get(a.source if a.target == v else a.target) == d - 1
            ]
            assert len(parents) == 1, "one-cycle quivers have unique tree parents"
            if current.is_conj(parents[0].name):
                flip(v)
        frontier = layer

    return current, tuple(flips)

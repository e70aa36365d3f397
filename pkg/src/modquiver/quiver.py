"""Finite quivers: directed multigraphs with named vertices and arrows.

All values here are immutable and deterministic. Vertices and arrows are
kept sorted by identifier, so component listings, path enumerations and
cycle traversals always come out in the same order.

A path is written the composition way: the path that traverses ``a`` and
then ``b`` prints as ``b*a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

from .errors import MultipleCyclesError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph. Loops and parallel arrows are allowed."""

    vertices: tuple[str, ...] = ()
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(
            self, "arrows", tuple(sorted(self.arrows, key=lambda a: a.name))
        )
        vs: set[str] = set()
        for v in self.vertices:
            if not v:
                raise ValueError("empty vertex identifier")
            if v in vs:
                raise ValueError(f"duplicate vertex identifier {v!r}")
            vs.add(v)
        names: set[str] = set()
        for a in self.arrows:
            if not a.name:
                raise ValueError("empty arrow identifier")
            if a.name in names:
                raise ValueError(f"duplicate arrow identifier {a.name!r}")
            names.add(a.name)
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name!r} has a dangling endpoint")

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        arrows: Iterable[Arrow | tuple[str, str, str]] = (),
    ) -> "Quiver":
        """Convenience constructor accepting ``(name, source, target)`` triples."""
        made = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in arrows)
        return cls(tuple(vertices), made)

    # -- lookups ---------------------------------------------------------

    @cached_property
    def _arrow_index(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow_index[name]
        except KeyError:
            raise ValueError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_index

    @cached_property
    def _out(self) -> dict[str, tuple[Arrow, ...]]:
        buckets: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            buckets[a.source].append(a)
        return {v: tuple(lst) for v, lst in buckets.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Arrow, ...]]:
        buckets: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            buckets[a.target].append(a)
        return {v: tuple(lst) for v, lst in buckets.items()}

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        return self._out[v]

    def in_arrows(self, v: str) -> tuple[Arrow, ...]:
        return self._in[v]

    # -- connectivity ----------------------------------------------------

    @cached_property
    def _neighbors(self) -> dict[str, tuple[str, ...]]:
        nbs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a in self.arrows:
            nbs[a.source].add(a.target)
            nbs[a.target].add(a.source)
        return {v: tuple(sorted(s)) for v, s in nbs.items()}

    @cached_property
    def component_vertex_sets(self) -> tuple[frozenset[str], ...]:
        """Weak components as vertex sets, ordered by smallest member."""
        seen: set[str] = set()
        comps: list[frozenset[str]] = []
        for start in self.vertices:
            if start in seen:
                continue
            stack = [start]
            comp = {start}
            seen.add(start)
            while stack:
                v = stack.pop()
                for w in self._neighbors[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return tuple(sorted(comps, key=min))

    @cached_property
    def is_connected(self) -> bool:
        return len(self.component_vertex_sets) == 1

    def subquiver(self, keep: frozenset[str]) -> "Quiver":
        """The full subquiver on ``keep``; arrows must not dangle."""
        vs = tuple(v for v in self.vertices if v in keep)
        arrs = tuple(a for a in self.arrows if a.source in keep and a.target in keep)
        return Quiver(vs, arrs)


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"

    @property
    def flipped(self) -> "Direction":
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


Step = tuple[str, Direction]


@dataclass(frozen=True)
class Path:
    """An oriented path, stored in traversal order (first arrow first)."""

    arrows: tuple[str, ...]
    start: str
    end: str

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        # composition order: last traversed arrow leftmost
        return "*".join(reversed(self.arrows))


def path_of(q: Quiver, arrow_names: Iterable[str]) -> Path:
    """Validate a traversal-ordered arrow sequence and build the path."""
    names = tuple(arrow_names)
    if not names:
        raise ValueError("a path needs at least one arrow")
    arrows = [q.arrow(n) for n in names]
    for a, b in zip(arrows, arrows[1:]):
        if a.target != b.source:
            raise ValueError(f"arrows {a.name!r} and {b.name!r} do not compose")
    return Path(names, arrows[0].source, arrows[-1].target)


@dataclass(frozen=True)
class Chain:
    """An unoriented walk using each arrow at most once."""

    steps: tuple[Step, ...]
    start: str
    end: str

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.steps)

    def reversed(self) -> "Chain":
        steps = tuple((name, d.flipped) for name, d in reversed(self.steps))
        return Chain(steps, self.end, self.start)


def step_endpoints(q: Quiver, step: Step) -> tuple[str, str]:
    """Entry and exit vertex of a chain step."""
    arrow = q.arrow(step[0])
    if step[1] is Direction.FORWARD:
        return arrow.source, arrow.target
    return arrow.target, arrow.source


def chain_of(q: Quiver, steps: Iterable[Step]) -> Chain:
    """Validate a step sequence and build the chain."""
    seq = tuple(steps)
    if not seq:
        raise ValueError("a chain needs at least one step")
    used: set[str] = set()
    prev_exit: str | None = None
    start = ""
    for step in seq:
        name = step[0]
        if name in used:
            raise ValueError(f"arrow {name!r} repeats in the chain")
        used.add(name)
        entry, exit_ = step_endpoints(q, step)
        if prev_exit is None:
            start = entry
        elif entry != prev_exit:
            raise ValueError(f"step {name!r} does not continue the chain")
        prev_exit = exit_
    assert prev_exit is not None
    return Chain(seq, start, prev_exit)


@dataclass(frozen=True)
class CycleStructure:
    """The unique unoriented cycle of a one-cycle quiver, with a fixed traversal.

    ``vertices[k]`` is the entry vertex of ``chain.steps[k]``; the traversal
    starts at the smallest cycle vertex and leaves it through its
    smallest-named incident cycle arrow.
    """

    chain: Chain
    vertices: tuple[str, ...]
    arrow_names: frozenset[str]


def connected_components(q: Quiver) -> list[Quiver]:
    """Weakly connected subquivers, ordered by smallest vertex identifier."""
    return [q.subquiver(vs) for vs in q.component_vertex_sets]


def is_one_cycle(q: Quiver) -> bool:
    """Connected with first Betti number one, i.e. exactly one unoriented cycle.

    Loops and parallel arrow pairs count as cycles.
    """
    return bool(q.vertices) and q.is_connected and len(q.arrows) == len(q.vertices)


def find_cycle(q: Quiver) -> CycleStructure | None:
    """Locate the unique cycle of a connected quiver.

    Returns ``None`` for trees and raises :class:`MultipleCyclesError` when
    the first Betti number exceeds one. The traversal is deterministic:
    start at the smallest vertex on the cycle, leave it through the
    smallest-named incident cycle arrow, forward if that arrow starts there.
    """
    if not q.vertices or not q.is_connected:
        raise ValueError("find_cycle requires a nonempty connected quiver")
    betti = len(q.arrows) - len(q.vertices) + 1
    if betti <= 0:
        return None
    if betti > 1:
        raise MultipleCyclesError(f"quiver has first Betti number {betti}")

    # strip leaves until only the cycle remains
    alive_arrows: set[str] = {a.name for a in q.arrows}
    degree: dict[str, int] = {v: 0 for v in q.vertices}
    incident: dict[str, list[str]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        degree[a.source] += 1
        degree[a.target] += 1
        incident[a.source].append(a.name)
        if a.target != a.source:
            incident[a.target].append(a.name)
    leaves = [v for v in q.vertices if degree[v] == 1]
    dead: set[str] = set()
    while leaves:
        v = leaves.pop()
        dead.add(v)
        for name in incident[v]:
            if name not in alive_arrows:
                continue
            alive_arrows.remove(name)
            a = q.arrow(name)
            other = a.target if a.source == v else a.source
            degree[other] -= 1
            if degree[other] == 1 and other not in dead:
                leaves.append(other)

    cycle_vertices = sorted(v for v in q.vertices if v not in dead)
    start = cycle_vertices[0]
    first = min(n for n in incident[start] if n in alive_arrows)

    steps: list[Step] = []
    order: list[str] = []
    used: set[str] = set()
    current = start
    nxt = first
    while True:
        a = q.arrow(nxt)
        direction = Direction.FORWARD if a.source == current else Direction.BACKWARD
        steps.append((nxt, direction))
        order.append(current)
        used.add(nxt)
        current = a.target if direction is Direction.FORWARD else a.source
        if current == start and len(used) == len(alive_arrows):
            break
        candidates = [
            n for n in incident[current] if n in alive_arrows and n not in used
        ]
        nxt = min(candidates)

    chain = Chain(tuple(steps), start, start)
    return CycleStructure(chain, tuple(order), frozenset(alive_arrows))


def enumerate_paths(q: Quiver, max_len: int) -> list[Path]:
    """All paths of length 1..max_len, ordered by length then arrow sequence."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    out = q._out
    result: list[Path] = []
    level: list[Path] = [Path((a.name,), a.source, a.target) for a in q.arrows]
    result.extend(level)
    for _ in range(max_len - 1):
        nxt: list[Path] = []
        for p in level:
            for a in out[p.end]:
                nxt.append(Path(p.arrows + (a.name,), p.start, a.target))
        result.extend(nxt)
        level = nxt
        if not level:
            break
    return result


def length_two_paths(q: Quiver) -> list[Path]:
    """All composable pairs of arrows, in deterministic order."""
    if not q.arrows:
        return []
    return [p for p in enumerate_paths(q, 2) if len(p) == 2]

"""Bound quiver relations and the gentle one-cycle predicates.

A relation set presents an admissible ideal by monomial generators
(paths of length at least two) and at most one binomial generator
``left - scalar * right``. Scalars are tracked by class only: the
supported rewrites depend on whether the scalar is central, never on
its magnitude.

Gentleness of a vertex demands at most two arrows in, at most two out,
and whenever two distinct arrows enter (or leave) against one arrow on
the other side, exactly one of the two compositions is a relation. The
conditions are vacuous where fewer than two arrows meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .errors import (
    NonMonomialRelationsError,
    NotOneCycleError,
    NotVUniformError,
    UnsupportedBinomialError,
)
from .modulation import Modulation, Ring, is_v_uniform
from .quiver import (
    CycleStructure,
    Direction,
    Path,
    Quiver,
    Step,
    find_cycle,
    is_one_cycle,
)


class ScalarClass(Enum):
    """Which kind of nonzero scalar a binomial carries."""

    REAL = "real"
    COMPLEX = "complex"
    CENTRAL = "central"
    NONCENTRAL = "noncentral"

    def central_over(self, ring: Ring) -> bool:
        if self is ScalarClass.REAL or self is ScalarClass.CENTRAL:
            return True
        if self is ScalarClass.COMPLEX:
            return ring is Ring.C
        return False


_VALID_SCALARS = {
    Ring.R: {ScalarClass.REAL},
    Ring.C: {ScalarClass.REAL, ScalarClass.COMPLEX},
    Ring.H: {ScalarClass.REAL, ScalarClass.CENTRAL, ScalarClass.NONCENTRAL},
}


def check_scalar_over(ring: Ring, scalar: ScalarClass) -> None:
    if scalar not in _VALID_SCALARS[ring]:
        raise UnsupportedBinomialError(
            f"scalar class {scalar.value!r} does not exist over the ring {ring.value}"
        )


@dataclass(frozen=True)
class Binomial:
    """The relation ``left - scalar * right`` between two parallel paths."""

    left: Path
    right: Path
    scalar: ScalarClass

    def __post_init__(self) -> None:
        if self.left.start != self.right.start or self.left.end != self.right.end:
            raise ValueError("binomial paths must share both endpoints")
        if len(self.left) < 2 or len(self.right) < 2:
            raise ValueError("binomial paths must have length at least two")
        if self.left == self.right:
            raise ValueError("binomial paths must differ")


@dataclass(frozen=True)
class RelationSet:
    """Generators of an admissible ideal, over the base or the complexified quiver."""

    monomials: frozenset[Path] = frozenset()
    binomials: frozenset[Binomial] = frozenset()

    def __post_init__(self) -> None:
        for p in self.monomials:
            if len(p) < 2:
                raise ValueError("monomial relations must have length at least two")

    @classmethod
    def empty(cls) -> "RelationSet":
        return cls()

    @classmethod
    def of_monomials(cls, paths: Iterable[Path]) -> "RelationSet":
        return cls(frozenset(paths))

    @property
    def is_monomial(self) -> bool:
        return not self.binomials


@dataclass(frozen=True)
class OmegaMatch:
    """A binomial in the cycle-detour shape.

    ``beta`` enters the hub from outside the oriented cycle, ``gamma``
    leaves toward the outside, and the two paths of the binomial are
    ``gamma after beta`` and the same with one full turn of the cycle
    inserted.
    """

    hub: str
    cycle: tuple[str, ...]
    beta: str
    gamma: str
    scalar: ScalarClass


def is_contiguous_subpath(needle: Path, hay: Path) -> bool:
    n, h = needle.arrows, hay.arrows
    if len(n) > len(h):
        return False
    return any(h[i : i + len(n)] == n for i in range(len(h) - len(n) + 1))


def path_in_monomial_ideal(p: Path, monomials: Iterable[Path]) -> bool:
    """Membership of a path in the ideal generated by monomial relations."""
    return any(is_contiguous_subpath(mono, p) for mono in monomials)


def match_omega(
    q: Quiver, binomial: Binomial, monomials: Iterable[Path] = ()
) -> OmegaMatch | None:
    """Recognize the cycle-detour shape in either orientation of a binomial.

    Requirements: one path has length two, the other repeats its first and
    last arrow around a simple oriented cycle through the shared middle
    vertex, the outer endpoints avoid the cycle, and no monomial relation
    kills one full turn of the cycle.
    """
    mono = tuple(monomials)
    for short, long in (
        (binomial.left, binomial.right),
        (binomial.right, binomial.left),
    ):
        if len(short) != 2 or len(long) < 3:
            continue
        beta, gamma = short.arrows
        if long.arrows[0] != beta or long.arrows[-1] != gamma:
            continue
        cycle = long.arrows[1:-1]
        hub = q.arrow(beta).target
        visited = [hub] + [q.arrow(name).target for name in cycle[:-1]]
        if len(set(visited)) != len(visited):
            continue
        on_cycle = set(visited)
        if q.arrow(beta).source in on_cycle or q.arrow(gamma).target in on_cycle:
            continue
        if path_in_monomial_ideal(Path(cycle, hub, hub), mono):
            continue
        return OmegaMatch(hub, cycle, beta, gamma, binomial.scalar)
    return None


def detect_omega(q: Quiver, rels: RelationSet) -> OmegaMatch | None:
    """The cycle-detour match of the unique binomial generator, if any."""
    if len(rels.binomials) != 1:
        return None
    return match_omega(q, next(iter(rels.binomials)), rels.monomials)


def _short_monomial(q: Quiver, m: OmegaMatch) -> Path:
    return Path(
        (m.beta, m.gamma), q.arrow(m.beta).source, q.arrow(m.gamma).target
    )


def _long_monomial(q: Quiver, m: OmegaMatch) -> Path:
    return Path(
        (m.beta,) + m.cycle + (m.gamma,),
        q.arrow(m.beta).source,
        q.arrow(m.gamma).target,
    )


def monomialize(q: Quiver, rels: RelationSet) -> RelationSet:
    """Replace a cycle-detour binomial over the complexified quiver by its
    length-two path; the substitution ``gamma -> gamma - scalar*gamma*cycle``
    identifies the two presentations.
    """
    if rels.is_monomial:
        return rels
    if len(rels.binomials) > 1:
        raise UnsupportedBinomialError("at most one binomial generator is supported")
    b = next(iter(rels.binomials))
    if b.scalar is ScalarClass.NONCENTRAL:
        raise UnsupportedBinomialError(
            "noncentral scalars do not exist over the complex numbers"
        )
    match = match_omega(q, b, rels.monomials)
    if match is None:
        raise UnsupportedBinomialError(
            "binomial generator is not in the supported cycle-detour shape"
        )
    return RelationSet(rels.monomials | {_short_monomial(q, match)}, frozenset())


def real_monomialize(q: Quiver, m: Modulation, rels: RelationSet) -> RelationSet:
    """Rewrite a real-side cycle-detour binomial into monomial generators.

    Over R, and over H with a central scalar, the binomial is equivalent
    to its length-two path alone. Over H with a noncentral scalar the
    ideal contains both paths separately, so both become generators.
    """
    if rels.is_monomial:
        return rels
    ring = is_v_uniform(q, m)
    if ring is None:
        raise NotVUniformError("binomial rewriting needs a vertex-uniform modulation")
    if ring is Ring.C:
        raise UnsupportedBinomialError(
            "binomial rewriting over a C-uniform modulation is undefined"
        )
    if len(rels.binomials) > 1:
        raise UnsupportedBinomialError("at most one binomial generator is supported")
    b = next(iter(rels.binomials))
    check_scalar_over(ring, b.scalar)
    match = match_omega(q, b, rels.monomials)
    if match is None:
        raise UnsupportedBinomialError(
            "binomial generator is not in the supported cycle-detour shape"
        )
    if b.scalar.central_over(ring):
        extra = {_short_monomial(q, match)}
    else:
        extra = {_short_monomial(q, match), _long_monomial(q, match)}
    return RelationSet(rels.monomials | extra, frozenset())


# -- gentle vertices ------------------------------------------------------


def _display(arrows: tuple[str, ...]) -> str:
    return "*".join(reversed(arrows))


def _as_arrow_tuples(rel_paths: Iterable[Path]) -> set[tuple[str, ...]]:
    rel = set()
    for p in rel_paths:
        if len(p) != 2:
            raise NonMonomialRelationsError(
                f"expected length-two monomial relations, got {_display(p.arrows)}"
            )
        rel.add(p.arrows)
    return rel


def gentle_vertex_witness(
    q: Quiver, rel: set[tuple[str, ...]], v: str
) -> str | None:
    """Why the vertex fails to be gentle, or ``None`` if it is gentle."""
    ins = q.in_arrows(v)
    outs = q.out_arrows(v)
    if len(outs) > 2:
        return f"vertex {v}: more than two arrows start here"
    if len(ins) > 2:
        return f"vertex {v}: more than two arrows end here"
    for b, g in combinations(ins, 2):
        for a in outs:
            first = (b.name, a.name) in rel
            second = (g.name, a.name) in rel
            if first == second:
                kind = "both of" if first else "neither of"
                return (
                    f"vertex {v}: {kind} {a.name}*{b.name} and {a.name}*{g.name} "
                    f"are relations"
                )
    for b, g in combinations(outs, 2):
        for a in ins:
            first = (a.name, b.name) in rel
            second = (a.name, g.name) in rel
            if first == second:
                kind = "both of" if first else "neither of"
                return (
                    f"vertex {v}: {kind} {b.name}*{a.name} and {g.name}*{a.name} "
                    f"are relations"
                )
    return None


def is_gentle_vertex(q: Quiver, rel_paths: Iterable[Path], v: str) -> bool:
    """Gentleness of one vertex against length-two monomial relations."""
    return gentle_vertex_witness(q, _as_arrow_tuples(rel_paths), v) is None


def is_gentle(q: Quiver, rels: RelationSet) -> bool:
    """Monomial, every generator of length exactly two, every vertex gentle."""
    if rels.binomials:
        return False
    if any(len(p) != 2 for p in rels.monomials):
        return False
    rel = {p.arrows for p in rels.monomials}
    return all(gentle_vertex_witness(q, rel, v) is None for v in q.vertices)


# -- clock condition ------------------------------------------------------


def clock_counts_on_steps(
    steps: tuple[Step, ...], rel: set[tuple[str, ...]]
) -> tuple[int, int]:
    """Count cycle relations running with and against a given traversal."""
    cw = ccw = 0
    length = len(steps)
    for i in range(length):
        a_name, a_dir = steps[i]
        b_name, b_dir = steps[(i + 1) % length]
        if a_dir is Direction.FORWARD and b_dir is Direction.FORWARD:
            cw += (a_name, b_name) in rel
        elif a_dir is Direction.BACKWARD and b_dir is Direction.BACKWARD:
            ccw += (b_name, a_name) in rel
    return cw, ccw


def clock_counts(
    q: Quiver, rel_paths: Iterable[Path], cycle: CycleStructure | None = None
) -> tuple[int, int]:
    """Clockwise and counterclockwise length-two cycle relations.

    A length-two path lies on the cycle when its two arrows are cycle
    arrows, consecutive along it, and consistently oriented; the side it
    counts for depends on agreement with the chosen traversal.
    """
    rel = _as_arrow_tuples(rel_paths)
    if cycle is None:
        if not is_one_cycle(q):
            raise NotOneCycleError("clock counting needs a one-cycle quiver")
        cycle = find_cycle(q)
        assert cycle is not None
    return clock_counts_on_steps(cycle.chain.steps, rel)


# -- the composite predicate ----------------------------------------------


@dataclass(frozen=True)
class PredicateResult:
    holds: bool | None
    witness: str


def is_gentle_one_cycle_no_clock(q: Quiver, rels: RelationSet) -> PredicateResult:
    """Gentle, one-cycle, and with unequal clockwise/counterclockwise counts.

    The witness names the first failing clause.
    """
    if not is_one_cycle(q):
        return PredicateResult(
            False,
            f"not one-cycle: {len(q.vertices)} vertices, {len(q.arrows)} arrows, "
            f"connected={'yes' if q.is_connected else 'no'}",
        )
    if rels.binomials:
        return PredicateResult(False, "relations are not monomial")
    long = sorted(
        (p for p in rels.monomials if len(p) != 2),
        key=lambda p: (len(p), p.arrows),
    )
    if long:
        return PredicateResult(
            False, f"relation {_display(long[0].arrows)} does not have length two"
        )
    rel = {p.arrows for p in rels.monomials}
    for v in q.vertices:
        witness = gentle_vertex_witness(q, rel, v)
        if witness is not None:
            return PredicateResult(False, witness)
    cycle = find_cycle(q)
    assert cycle is not None
    cw, ccw = clock_counts_on_steps(cycle.chain.steps, rel)
    if cw == ccw:
        return PredicateResult(
            False, f"clock condition holds: clockwise={cw} counterclockwise={ccw}"
        )
    return PredicateResult(
        True,
        f"gentle one-cycle without clock condition: clockwise={cw} "
        f"counterclockwise={ccw}",
    )


def real_algebra_predicate(
    q: Quiver, m: Modulation, rels: RelationSet
) -> PredicateResult:
    """Whether the presented real algebra is gentle one-cycle without clock
    condition: vertex-uniform modulation plus the bound quiver predicate
    after binomial rewriting.
    """
    if q.vertices and is_v_uniform(q, m) is None:
        return PredicateResult(False, "modulation is not vertex-uniform")
    reduced = real_monomialize(q, m, rels)
    return is_gentle_one_cycle_no_clock(q, reduced)

"""Classification reports: the two-sided equivalence check and the
derived-discreteness verdict.

The equivalence check evaluates, independently, whether the presented
real algebra is gentle one-cycle without clock condition and whether
every connected component of its complexified presentation is. The two
answers must agree on the whole supported fragment; a disagreement is a
counterexample worth dumping.

The verdict recognizes two certified classes: gentle one-cycle without
clock condition, and hereditary algebras whose valued graph is Dynkin.
Everything else is reported inconclusive rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexify import ComplexQuiver, build_gamma, transport_ideal
from .errors import (
    EmptyQuiverError,
    InvalidModulationError,
    NotVUniformError,
    UnsupportedBinomialError,
)
from .modulation import Modulation, is_v_uniform, validate
from .quiver import Quiver, connected_components, is_one_cycle
from .relations import (
    PredicateResult,
    RelationSet,
    is_gentle_one_cycle_no_clock,
    monomialize,
    real_monomialize,
)

VERDICT_GENTLE_ONE_CYCLE = "DerivedDiscrete-GentleOneCycle"
VERDICT_HEREDITARY_DYNKIN = "DerivedDiscrete-HereditaryDynkin"
VERDICT_INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[str, ...]
    result: PredicateResult


@dataclass(frozen=True)
class ClassificationReport:
    real: PredicateResult
    components: tuple[ComponentReport, ...]
    complex_value: bool | None
    consistent: bool | None
    verdict: str
    dynkin: str
    notes: tuple[str, ...]

    def to_flat_dict(self) -> dict[str, object]:
        d: dict[str, object] = {
            "real.value": self.real.holds,
            "real.witness": self.real.witness,
            "complex.value": self.complex_value,
            "complex.components": len(self.components),
        }
        for i, comp in enumerate(self.components):
            d[f"complex.{i}.vertices"] = " ".join(comp.vertices)
            d[f"complex.{i}.value"] = comp.result.holds
            d[f"complex.{i}.witness"] = comp.result.witness
        d["consistent"] = self.consistent
        d["verdict"] = self.verdict
        d["dynkin"] = self.dynkin
        d["notes"] = "; ".join(self.notes)
        return d


def _restrict(rels: RelationSet, vertex_set: frozenset[str]) -> RelationSet:
    """Generators lying inside one component; paths never cross components."""
    mono = frozenset(p for p in rels.monomials if p.start in vertex_set)
    bino = frozenset(b for b in rels.binomials if b.left.start in vertex_set)
    return RelationSet(mono, bino)


def check_equivalence(
    q: Quiver, m: Modulation, rels: RelationSet, cq: ComplexQuiver | None = None
) -> ClassificationReport:
    """Evaluate both sides of the gentle one-cycle equivalence and compare.

    When the ideal transport is outside the supported fragment, the
    complexified side is still decided if its quiver structure already
    falsifies the predicate; otherwise the undecidable parts are reported
    as such and the comparison stays open.
    """
    if not q.vertices:
        raise EmptyQuiverError("cannot classify the empty presentation")
    problems = validate(q, m)
    if problems:
        raise InvalidModulationError("; ".join(problems))
    notes: list[str] = []

    if is_v_uniform(q, m) is None:
        real = PredicateResult(False, "modulation is not vertex-uniform")
    else:
        try:
            real = is_gentle_one_cycle_no_clock(q, real_monomialize(q, m, rels))
        except UnsupportedBinomialError as exc:
            real = PredicateResult(None, f"not evaluated: {exc}")
            notes.append(f"real side not evaluated: {exc}")

    if cq is None:
        cq = build_gamma(q, m)
    parts = connected_components(cq.gamma)

    transported: RelationSet | None
    try:
        transported = monomialize(cq.gamma, transport_ideal(q, m, rels, cq))
    except (NotVUniformError, UnsupportedBinomialError) as exc:
        transported = None
        notes.append(f"ideal transport not available: {exc}")

    comp_reports: list[ComponentReport] = []
    for part in parts:
        if transported is not None:
            result = is_gentle_one_cycle_no_clock(
                part, _restrict(transported, frozenset(part.vertices))
            )
        elif not is_one_cycle(part):
            # false for every admissible ideal, so the missing transport
            # does not matter
            result = is_gentle_one_cycle_no_clock(part, RelationSet.empty())
        else:
            result = PredicateResult(None, "not evaluated: ideal transport unavailable")
        comp_reports.append(ComponentReport(part.vertices, result))

    values = [c.result.holds for c in comp_reports]
    if any(v is False for v in values):
        complex_value: bool | None = False
    elif all(v is True for v in values):
        complex_value = True
    else:
        complex_value = None

    if real.holds is None or complex_value is None:
        consistent: bool | None = None
    else:
        consistent = real.holds == complex_value

    dynkin = ""
    if real.holds:
        verdict = VERDICT_GENTLE_ONE_CYCLE
    elif not rels.monomials and not rels.binomials:
        vg = valued_graph(q, m)
        dynkin = vg.type_summary()
        verdict = VERDICT_HEREDITARY_DYNKIN if vg.is_dynkin else VERDICT_INCONCLUSIVE
        if verdict == VERDICT_INCONCLUSIVE:
            notes.append(
                "hereditary but the valued graph is not Dynkin; general "
                "piecewise-hereditary detection is out of scope"
            )
    else:
        verdict = VERDICT_INCONCLUSIVE
        if real.holds is False:
            notes.append(
                "not gentle one-cycle without clock condition and not hereditary; "
                "general piecewise-hereditary detection is out of scope"
            )
    if not q.is_connected:
        notes.append("quiver is not connected; the verdict describes the product")

    return ClassificationReport(
        real,
        tuple(comp_reports),
        complex_value,
        consistent,
        verdict,
        dynkin,
        tuple(notes),
    )


def classify(q: Quiver, m: Modulation, rels: RelationSet) -> ClassificationReport:
    """Derived-discreteness verdict for a presented real algebra."""
    return check_equivalence(q, m, rels)


# -- valued graphs and the Dynkin table ------------------------------------


@dataclass(frozen=True)
class ValuedEdge:
    """One edge of the valued graph; ``d_uv`` is the dimension over the
    ring at ``v`` and ``d_vu`` over the ring at ``u``."""

    u: str
    v: str
    d_uv: int
    d_vu: int


@dataclass(frozen=True)
class ValuedGraph:
    vertices: tuple[str, ...]
    edges: tuple[ValuedEdge, ...]
    loops: tuple[str, ...]

    @property
    def is_dynkin(self) -> bool:
        types = self.component_types()
        return bool(types) and all(t is not None for t in types)

    def type_summary(self) -> str:
        return " ".join(t if t is not None else "-" for t in self.component_types())

    def component_types(self) -> tuple[str | None, ...]:
        """One Dynkin label per connected component, ``None`` if unlisted."""
        if not self.vertices:
            return ()
        adjacency: dict[str, list[tuple[str, ValuedEdge]]] = {
            v: [] for v in self.vertices
        }
        for e in self.edges:
            adjacency[e.u].append((e.v, e))
            adjacency[e.v].append((e.u, e))
        seen: set[str] = set()
        labels: list[str | None] = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            seen.add(start)
            while stack:
                x = stack.pop()
                for y, _ in adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            labels.append(self._component_type(comp, adjacency))
        return tuple(labels)

    def _component_type(
        self, comp: set[str], adjacency: dict[str, list[tuple[str, ValuedEdge]]]
    ) -> str | None:
        if any(v in comp for v in self.loops):
            return None
        edges = {e for v in comp for _, e in adjacency[v]}
        n = len(comp)
        if len(edges) != n - 1:
            return None  # not a tree
        degree = {v: len(adjacency[v]) for v in comp}
        heavy = [e for e in edges if (e.d_uv, e.d_vu) != (1, 1)]
        products = [e.d_uv * e.d_vu for e in heavy]
        if len(heavy) > 1 or any(p > 3 for p in products):
            return None
        branch = [v for v in comp if degree[v] >= 3]
        if not heavy:
            if not branch:
                return f"A{n}"
            if len(branch) > 1 or degree[branch[0]] > 3:
                return None
            arms = sorted(self._arm_lengths(branch[0], adjacency))
            if arms[0] == 1 and arms[1] == 1:
                return f"D{n}"
            if arms == [1, 2, 2]:
                return "E6"
            if arms == [1, 2, 3]:
                return "E7"
            if arms == [1, 2, 4]:
                return "E8"
            return None
        if branch:
            return None
        edge = heavy[0]
        if products[0] == 3:
            return "G2" if n == 2 else None
        # products[0] == 2: a path with one doubled edge
        ends = [v for v in comp if degree[v] <= 1]
        if n == 1 or len(ends) != 2:
            return None
        position = min(
            self._distance(ends[0], edge, adjacency),
            self._distance(ends[1], edge, adjacency),
        )
        if position == 0:
            return f"B{n}/C{n}"
        if position == 1 and n == 4:
            return "F4"
        return None

    @staticmethod
    def _arm_lengths(
        branch: str, adjacency: dict[str, list[tuple[str, ValuedEdge]]]
    ) -> list[int]:
        arms = []
        for first, edge in adjacency[branch]:
            length = 1
            cur = first
            while True:
                nxt = [(y, e) for y, e in adjacency[cur] if e is not edge]
                if not nxt:
                    break
                cur, edge = nxt[0]
                length += 1
            arms.append(length)
        return arms

    @staticmethod
    def _distance(
        end: str, target: ValuedEdge, adjacency: dict[str, list[tuple[str, ValuedEdge]]]
    ) -> int:
        # walk the path from one end, counting edges before the target
        steps = 0
        prev_edge: ValuedEdge | None = None
        cur = end
        while True:
            options = [(y, e) for y, e in adjacency[cur] if e is not prev_edge]
            if not options:
                return steps  # should not happen on a path containing target
            y, e = options[0]
            if e is target:
                return steps
            steps += 1
            prev_edge = e
            cur = y


def valued_graph(q: Quiver, m: Modulation) -> ValuedGraph:
    """The valued graph of a modulated quiver.

    Parallel arrows between the same pair of vertices merge into one edge
    whose bimodule dimensions add up.
    """
    totals: dict[tuple[str, str], int] = {}
    loops: list[str] = []
    for a in q.arrows:
        if a.source == a.target:
            if a.source not in loops:
                loops.append(a.source)
            continue
        key = (min(a.source, a.target), max(a.source, a.target))
        totals[key] = totals.get(key, 0) + m.kind_of(a).real_dim
    edges = []
    for (u, v), dim in sorted(totals.items()):
        edges.append(
            ValuedEdge(u, v, dim // m.ring(v).real_dim, dim // m.ring(u).real_dim)
        )
    return ValuedGraph(q.vertices, tuple(edges), tuple(sorted(loops)))

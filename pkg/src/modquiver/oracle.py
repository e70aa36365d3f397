"""Independent verification machinery.

Three kinds of checks live here:

* a dimension-counting oracle that confirms, path by path, that the
  number of fibers in the complexified quiver matches the bimodule
  dimension arithmetic;
* a quiver isomorphism search used to validate rewrites that are only
  claimed to preserve the quiver up to isomorphism;
* exhaustive sweeps over every small connected modulated quiver and
  every relation set in the supported fragment, checking the two-sided
  equivalence, the structural bookkeeping of the complexification, and
  a family of combinatorial implications.

Enumeration is up to isomorphism via a canonical labeling, so each
shape is visited exactly once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations, product

from .classify import check_equivalence
from .complexify import ComplexQuiver, build_gamma, fibers_of_path, orbit_quiver
from .modulation import (
    Modulation,
    Ring,
    flip_at_vertex,
    is_v_uniform,
    normalize_one_cycle_steps,
    path_real_dim,
)
from .quiver import (
    Arrow,
    Path,
    Quiver,
    connected_components,
    enumerate_paths,
    find_cycle,
    is_one_cycle,
    length_two_paths,
)
from .relations import (
    Binomial,
    RelationSet,
    ScalarClass,
    gentle_vertex_witness,
    path_in_monomial_ideal,
)

_VERTEX_NAMES = "abcdefgh"
_ARROW_NAMES = ("p", "q", "r", "s", "t", "u", "v", "w")


@dataclass(frozen=True)
class SweepConfig:
    """Bounds and filters for the exhaustive sweeps."""

    max_vertices: int = 3
    max_arrows: int = 4
    max_path_len: int = 4
    uniform_only: bool = True
    include_omega: bool = True

    def __post_init__(self) -> None:
        if self.max_vertices < 1 or self.max_arrows < 0:
            raise ValueError("bounds must be positive")
        if self.max_path_len < 2:
            raise ValueError("max_path_len must be at least 2")
        if self.max_vertices > len(_VERTEX_NAMES) or self.max_arrows > len(
            _ARROW_NAMES
        ):
            raise ValueError("bounds exceed the supported enumeration size")


# -- quiver isomorphism -----------------------------------------------------


@dataclass(frozen=True)
class IsoMapping:
    vertex_map: tuple[tuple[str, str], ...]
    arrow_map: tuple[tuple[str, str], ...]


def _pair_counts(q: Quiver) -> dict[tuple[str, str], int]:
    counts: dict[tuple[str, str], int] = {}
    for a in q.arrows:
        key = (a.source, a.target)
        counts[key] = counts.get(key, 0) + 1
    return counts


def quiver_isomorphic(a: Quiver, b: Quiver) -> IsoMapping | None:
    """A bijection of vertices and arrows preserving sources and targets.

    Backtracking with degree-signature pruning; meant for the desk-scale
    quivers this package works with.
    """
    if len(a.vertices) != len(b.vertices) or len(a.arrows) != len(b.arrows):
        return None

    def signature(q: Quiver, v: str) -> tuple[int, int, int]:
        outs = q.out_arrows(v)
        loops = sum(1 for x in outs if x.target == v)
        return (len(outs), len(q.in_arrows(v)), loops)

    sig_a = {v: signature(a, v) for v in a.vertices}
    sig_b = {v: signature(b, v) for v in b.vertices}
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return None

    counts_a = _pair_counts(a)
    counts_b = _pair_counts(b)
    order = sorted(a.vertices, key=lambda v: (sig_a[v], v))
    assigned: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        if counts_a.get((v, v), 0) != counts_b.get((w, w), 0):
            return False
        for u, x in assigned.items():
            if counts_a.get((u, v), 0) != counts_b.get((x, w), 0):
                return False
            if counts_a.get((v, u), 0) != counts_b.get((w, x), 0):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in b.vertices:
            if w in used or sig_b[w] != sig_a[v]:
                continue
            if not consistent(v, w):
                continue
            assigned[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del assigned[v]
            used.remove(w)
        return False

    if not extend(0):
        return None
    buckets_b: dict[tuple[str, str], list[str]] = {}
    for arr in b.arrows:
        buckets_b.setdefault((arr.source, arr.target), []).append(arr.name)
    arrow_map: list[tuple[str, str]] = []
    taken: dict[tuple[str, str], int] = {}
    for arr in a.arrows:
        key = (assigned[arr.source], assigned[arr.target])
        idx = taken.get(key, 0)
        arrow_map.append((arr.name, buckets_b[key][idx]))
        taken[key] = idx + 1
    return IsoMapping(tuple(sorted(assigned.items())), tuple(arrow_map))


# -- canonical enumeration ---------------------------------------------------


def _edge_connected(n: int, edges: tuple[tuple[int, int], ...]) -> bool:
    if n == 1:
        return True
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    root = find(0)
    return all(find(i) == root for i in range(n))


def enumerate_connected_quivers(max_vertices: int, max_arrows: int) -> list[Quiver]:
    """Every connected quiver within the bounds, one per isomorphism class.

    Canonical form: the sorted edge-index multiset, minimized over all
    vertex relabelings; only the minimizing labeling is emitted.
    """
    result: list[Quiver] = []
    for n in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(n) for j in range(n)]
        lo = 0 if n == 1 else n - 1
        for m in range(lo, max_arrows + 1):
            for combo in combinations_with_replacement(pairs, m):
                if not _edge_connected(n, combo):
                    continue
                canonical = min(
                    tuple(sorted((perm[i], perm[j]) for i, j in combo))
                    for perm in permutations(range(n))
                )
                if canonical != combo:
                    continue
                vertices = tuple(_VERTEX_NAMES[:n])
                arrows = tuple(
                    Arrow(_ARROW_NAMES[k], _VERTEX_NAMES[i], _VERTEX_NAMES[j])
                    for k, (i, j) in enumerate(combo)
                )
                result.append(Quiver(vertices, arrows))
    return result


_RING_ORDER = (Ring.R, Ring.C, Ring.H)


def enumerate_modulations(q: Quiver, uniform_only: bool = False) -> list[Modulation]:
    """Every catalog-valid modulation of a quiver, deterministically ordered."""
    if uniform_only:
        assignments = [{v: ring for v in q.vertices} for ring in _RING_ORDER]
    else:
        assignments = [
            dict(zip(q.vertices, choice))
            for choice in product(_RING_ORDER, repeat=len(q.vertices))
        ]
    result: list[Modulation] = []
    for rings in assignments:
        cc = [
            a.name
            for a in q.arrows
            if rings[a.source] is Ring.C and rings[a.target] is Ring.C
        ]
        for mask in range(1 << len(cc)):
            conj = frozenset(name for k, name in enumerate(cc) if mask >> k & 1)
            result.append(Modulation(dict(rings), conj))
    return result


@dataclass(frozen=True)
class OmegaConfig:
    hub: str
    cycle: tuple[str, ...]
    beta: str
    gamma: str


def omega_configs(q: Quiver) -> list[OmegaConfig]:
    """Cycle-detour attachment sites: a simple oriented cycle through a hub
    with an entering and a leaving arrow whose far endpoints avoid the cycle."""
    cycles: set[tuple[str, ...]] = set()

    def walk(start: str, at: str, names: tuple[str, ...], seen: frozenset[str]) -> None:
        for a in q.out_arrows(at):
            if a.target == start:
                closed = names + (a.name,)
                rotations = [closed[i:] + closed[:i] for i in range(len(closed))]
                cycles.add(min(rotations))
            elif a.target not in seen:
                walk(start, a.target, names + (a.name,), seen | {a.target})

    for v in q.vertices:
        walk(v, v, (), frozenset({v}))

    configs: list[OmegaConfig] = []
    for cycle in sorted(cycles):
        on_cycle = {q.arrow(cycle[0]).source} | {q.arrow(n).target for n in cycle}
        for rotation in range(len(cycle)):
            rotated = cycle[rotation:] + cycle[:rotation]
            hub = q.arrow(rotated[0]).source
            for b in q.in_arrows(hub):
                if b.source in on_cycle:
                    continue
                for g in q.out_arrows(hub):
                    if g.target in on_cycle:
                        continue
                    configs.append(OmegaConfig(hub, rotated, b.name, g.name))
    return configs


def iter_relation_sets(q: Quiver, m: Modulation, include_omega: bool):
    """All length-two monomial subsets, optionally extended by one
    cycle-detour binomial over R- or H-uniform modulations."""
    l2 = length_two_paths(q)
    subsets: list[frozenset[Path]] = []
    for mask in range(1 << len(l2)):
        subsets.append(frozenset(p for k, p in enumerate(l2) if mask >> k & 1))
    for chosen in subsets:
        yield RelationSet(chosen)
    if not include_omega:
        return
    ring = is_v_uniform(q, m)
    if ring not in (Ring.R, Ring.H):
        return
    scalars = (
        (ScalarClass.REAL,)
        if ring is Ring.R
        else (ScalarClass.CENTRAL, ScalarClass.NONCENTRAL)
    )
    for cfg in omega_configs(q):
        beta = q.arrow(cfg.beta)
        gamma = q.arrow(cfg.gamma)
        short = Path((cfg.beta, cfg.gamma), beta.source, gamma.target)
        long = Path((cfg.beta,) + cfg.cycle + (cfg.gamma,), beta.source, gamma.target)
        lap = Path(cfg.cycle, cfg.hub, cfg.hub)
        for scalar in scalars:
            binomial = frozenset({Binomial(short, long, scalar)})
            for chosen in subsets:
                if path_in_monomial_ideal(lap, chosen):
                    continue
                yield RelationSet(chosen, binomial)


# -- the fiber-counting oracle ----------------------------------------------


@dataclass(frozen=True)
class FiberMismatch:
    path: Path
    fibers: int
    expected: int


def fiber_count_oracle(
    q: Quiver, m: Modulation, max_len: int, cq: ComplexQuiver | None = None
) -> FiberMismatch | None:
    """Check that fiber counts reproduce the bimodule dimension arithmetic.

    For every path p up to the bound, the number of fibers times the
    idempotent truncation factors of the endpoint rings must equal the
    real dimension of the bimodule along p. Returns the first violation.
    """
    if cq is None:
        cq = build_gamma(q, m)
    for p in enumerate_paths(q, max_len):
        fibers = len(fibers_of_path(cq, p))
        factor = m.ring(p.start).fiber_factor * m.ring(p.end).fiber_factor
        expected = path_real_dim(q, m, p)
        if fibers * factor != expected:
            return FiberMismatch(p, fibers, expected)
    return None


# -- sweep reports ------------------------------------------------------------


@dataclass
class SweepFailure:
    family: str
    detail: str
    document: str


@dataclass
class SweepReport:
    quivers: int = 0
    modulations: int = 0
    instances: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    failure: SweepFailure | None = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure is None

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by


def _instance_document(q: Quiver, m: Modulation, rels: RelationSet) -> str:
    # imported lazily: the text layer depends on the algebra modules
    from .textio import document_of, serialize

    return serialize(document_of(q, m, rels))


def sweep_equivalence(cfg: SweepConfig) -> SweepReport:
    """Run the two-sided equivalence check over the whole enumeration.

    Any instance whose two sides disagree is a counterexample and stops
    the sweep with a replayable document. Instances outside the supported
    transport fragment (mixed modulations with relations and a structurally
    viable complexification) cannot be compared; they are tallied as
    ``undecided``. None occur over vertex-uniform modulations.
    """
    started = time.monotonic()
    report = SweepReport()
    for q in enumerate_connected_quivers(cfg.max_vertices, cfg.max_arrows):
        report.quivers += 1
        for m in enumerate_modulations(q, uniform_only=cfg.uniform_only):
            report.modulations += 1
            cq = build_gamma(q, m)
            for rels in iter_relation_sets(q, m, cfg.include_omega):
                report.instances += 1
                rep = check_equivalence(q, m, rels, cq=cq)
                if rep.consistent is False:
                    report.failure = SweepFailure(
                        "equivalence",
                        f"real={rep.real.holds} complex={rep.complex_value} "
                        f"real_witness={rep.real.witness!r}",
                        _instance_document(q, m, rels),
                    )
                    report.elapsed = time.monotonic() - started
                    return report
                if rep.consistent is None:
                    report.bump("undecided")
                    continue
                if rep.real.holds:
                    report.bump("real_true")
                if rels.binomials:
                    report.bump("binomial_instances")
    report.elapsed = time.monotonic() - started
    return report


def sweep_fiber_counts(cfg: SweepConfig) -> SweepReport:
    """Run the fiber-counting oracle over every modulated quiver in bounds."""
    started = time.monotonic()
    report = SweepReport()
    for q in enumerate_connected_quivers(cfg.max_vertices, cfg.max_arrows):
        report.quivers += 1
        paths = len(enumerate_paths(q, cfg.max_path_len))
        for m in enumerate_modulations(q, uniform_only=cfg.uniform_only):
            report.modulations += 1
            mismatch = fiber_count_oracle(q, m, cfg.max_path_len)
            report.instances += paths
            if mismatch is not None:
                report.failure = SweepFailure(
                    "fiber-count",
                    f"path {mismatch.path} has {mismatch.fibers} fibers, "
                    f"dimension {mismatch.expected}",
                    _instance_document(q, m, RelationSet.empty()),
                )
                report.elapsed = time.monotonic() - started
                return report
    report.elapsed = time.monotonic() - started
    return report


def _structure_problems(q: Quiver, m: Modulation, cq: ComplexQuiver) -> str | None:
    gamma = cq.gamma
    for v in gamma.vertices:
        if cq.tau_vertex[cq.tau_vertex[v]] != v:
            return f"vertex involution fails at {v}"
        if cq.pi_vertex[cq.tau_vertex[v]] != cq.pi_vertex[v]:
            return f"projection not involution-stable at {v}"
    for a in gamma.arrows:
        ta = cq.tau_arrow[a.name]
        if cq.tau_arrow[ta] != a.name:
            return f"arrow involution fails at {a.name}"
        if cq.pi_arrow[ta] != cq.pi_arrow[a.name]:
            return f"projection not involution-stable at {a.name}"
        mate = gamma.arrow(ta)
        if (
            mate.source != cq.tau_vertex[a.source]
            or mate.target != cq.tau_vertex[a.target]
        ):
            return f"involution is not a quiver map at {a.name}"
    if orbit_quiver(cq) != q:
        return "orbit quiver differs from the base quiver"
    for v in q.vertices:
        expected = 2 if m.ring(v) is Ring.C else 1
        if len(cq.vertex_fibers[v]) != expected:
            return f"vertex {v} has {len(cq.vertex_fibers[v])} fibers"
    for a in q.arrows:
        if len(cq.arrow_fibers[a.name]) != m.kind_of(a).fiber_multiplicity:
            return f"arrow {a.name} has the wrong number of fibers"
    parts = connected_components(gamma)
    if q.is_connected and len(parts) > 2:
        return "more than two components over a connected base"
    if q.is_connected and any(m.ring(v) is not Ring.C for v in q.vertices):
        if len(parts) != 1:
            return "disconnected despite a real or quaternion vertex"
    return None


def sweep_structure(cfg: SweepConfig) -> SweepReport:
    """Verify the complexification bookkeeping on every instance:
    involution and projection identities, orbit recovery, fiber counts,
    and invariance of the quiver under conjugation flips and cycle
    normalization."""
    started = time.monotonic()
    report = SweepReport()
    empty = RelationSet.empty()
    for q in enumerate_connected_quivers(cfg.max_vertices, cfg.max_arrows):
        report.quivers += 1
        for m in enumerate_modulations(q, uniform_only=cfg.uniform_only):
            report.modulations += 1
            report.instances += 1
            cq = build_gamma(q, m)
            problem = _structure_problems(q, m, cq)
            if problem is None and is_v_uniform(q, m) is Ring.C:
                for v in q.vertices:
                    if any(a.target == v for a in q.out_arrows(v)):
                        continue
                    flipped = flip_at_vertex(q, m, v)
                    if flip_at_vertex(q, flipped, v) != m:
                        problem = f"flip at {v} is not an involution"
                        break
                    if (
                        quiver_isomorphic(build_gamma(q, flipped).gamma, cq.gamma)
                        is None
                    ):
                        problem = f"flip at {v} changes the complexified quiver"
                        break
                if problem is None and is_one_cycle(q):
                    normalized, flips = normalize_one_cycle_steps(q, m)
                    replay = m
                    for v in flips:
                        replay = flip_at_vertex(q, replay, v)
                    if replay != normalized:
                        problem = "normalization flips do not replay"
                    elif (
                        quiver_isomorphic(build_gamma(q, normalized).gamma, cq.gamma)
                        is None
                    ):
                        problem = "normalization changes the complexified quiver"
            if problem is not None:
                report.failure = SweepFailure(
                    "structure", problem, _instance_document(q, m, empty)
                )
                report.elapsed = time.monotonic() - started
                return report
    report.elapsed = time.monotonic() - started
    return report


# -- implication families -----------------------------------------------------


def _tau_stable_subsets(cq: ComplexQuiver, paths: list[Path]) -> list[frozenset[Path]]:
    """Subsets closed under the sheet involution, enumerated by orbit."""
    orbits: list[frozenset[Path]] = []
    seen: set[Path] = set()
    for p in paths:
        if p in seen:
            continue
        orbit = frozenset({p, cq.tau_of_path(p)})
        seen.update(orbit)
        orbits.append(orbit)
    subsets: list[frozenset[Path]] = []
    for mask in range(1 << len(orbits)):
        chosen: set[Path] = set()
        for k, orbit in enumerate(orbits):
            if mask >> k & 1:
                chosen.update(orbit)
        subsets.append(frozenset(chosen))
    return subsets


def _has_bridge_chain(q: Quiver, m: Modulation) -> bool:
    """A chain joining two distinct non-C vertices whose interior is all C.

    Assumes the quiver is a tree, so the connecting chain is unique.
    """
    non_c = [v for v in q.vertices if m.ring(v) is not Ring.C]
    for u, w in combinations(non_c, 2):
        parent: dict[str, str | None] = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in q._neighbors[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        path: list[str] = [w]
        while parent[path[-1]] is not None:
            nxt = parent[path[-1]]
            assert nxt is not None
            path.append(nxt)
        interior = path[1:-1]
        if all(m.ring(x) is Ring.C for x in interior):
            return True
    return False


def sweep_implications(cfg: SweepConfig) -> SweepReport:
    """Check the combinatorial implications that tie the two sides together.

    The families, over all connected quivers in bounds and all catalog
    modulations:

    one_cycle_base: if every component of the complexified quiver is
        one-cycle, the base has at most one cycle; a tree base must carry
        a chain between two non-C vertices with all interior rings C.
    fiber_pairs: over C-uniform modulations every length-two path has
        exactly two fibers, swapped by the involution.
    ring_propagation: along a chain u-v-w with the middle ring R or H and
        u matching, a mismatched w forces the fiber of v to be non-gentle
        for every involution-stable relation set.
    cycle_uniformity: for a one-cycle base whose complexification has
        only one-cycle components, the rings on the base cycle agree; and
        no involution-stable relation set makes every fiber gentle unless
        the whole modulation is uniform. (Gentleness of all fibers is
        required here: off-cycle gentleness alone does not suffice, see
        the decision ledger.)
    gentle_transfer: over vertex-uniform modulations, a vertex is gentle
        exactly when all of its fibers are gentle after ideal transport.
    """
    started = time.monotonic()
    report = SweepReport()
    for q in enumerate_connected_quivers(cfg.max_vertices, cfg.max_arrows):
        report.quivers += 1
        l2 = length_two_paths(q)
        for m in enumerate_modulations(q, uniform_only=False):
            report.modulations += 1
            cq = build_gamma(q, m)
            gamma = cq.gamma
            parts = connected_components(gamma)
            all_one_cycle = all(is_one_cycle(part) for part in parts)
            uniform = is_v_uniform(q, m)
            gamma_l2 = length_two_paths(gamma)

            # one_cycle_base
            report.bump("one_cycle_base")
            if all_one_cycle:
                if len(q.arrows) - len(q.vertices) + 1 > 1:
                    report.failure = SweepFailure(
                        "one_cycle_base",
                        "one-cycle complexification over a multi-cycle base",
                        _instance_document(q, m, RelationSet.empty()),
                    )
                elif len(q.arrows) == len(q.vertices) - 1 and not _has_bridge_chain(
                    q, m
                ):
                    report.failure = SweepFailure(
                        "one_cycle_base",
                        "tree base without a non-C to non-C bridge chain",
                        _instance_document(q, m, RelationSet.empty()),
                    )
            if report.failure:
                report.elapsed = time.monotonic() - started
                return report

            # fiber_pairs
            if uniform is Ring.C:
                report.bump("fiber_pairs")
                for p in l2:
                    fibers = fibers_of_path(cq, p)
                    if len(fibers) != 2 or cq.tau_of_path(fibers[0]) != fibers[1]:
                        report.failure = SweepFailure(
                            "fiber_pairs",
                            f"fibers of {p} are not an involution pair",
                            _instance_document(q, m, RelationSet.empty()),
                        )
                        report.elapsed = time.monotonic() - started
                        return report

            # ring_propagation
            for v in q.vertices:
                ring_v = m.ring(v)
                if ring_v is Ring.C:
                    continue
                incident = list(
                    {a.name: a for a in q.in_arrows(v) + q.out_arrows(v)}.values()
                )
                for x, y in permutations(incident, 2):
                    u = x.source if x.target == v else x.target
                    w = y.source if y.target == v else y.target
                    if m.ring(u) is not ring_v or m.ring(w) is ring_v:
                        continue
                    report.bump("ring_propagation")
                    fv = cq.vertex_fibers[v][0]
                    local = [
                        p for p in gamma_l2 if gamma.arrow(p.arrows[0]).target == fv
                    ]
                    for chosen in _tau_stable_subsets(cq, local):
                        rel = {p.arrows for p in chosen}
                        if gentle_vertex_witness(gamma, rel, fv) is None:
                            report.failure = SweepFailure(
                                "ring_propagation",
                                f"fiber of {v} gentle despite ring mismatch at {w}",
                                _instance_document(q, m, RelationSet.empty()),
                            )
                            report.elapsed = time.monotonic() - started
                            return report

            # cycle_uniformity
            if is_one_cycle(q) and all_one_cycle:
                report.bump("cycle_uniformity")
                cycle = find_cycle(q)
                assert cycle is not None
                if len({m.ring(v) for v in cycle.vertices}) > 1:
                    report.failure = SweepFailure(
                        "cycle_uniformity",
                        "mixed rings on the base cycle",
                        _instance_document(q, m, RelationSet.empty()),
                    )
                    report.elapsed = time.monotonic() - started
                    return report
                if uniform is None:
                    for chosen in _tau_stable_subsets(cq, gamma_l2):
                        rel = {p.arrows for p in chosen}
                        if all(
                            gentle_vertex_witness(gamma, rel, fv) is None
                            for fv in gamma.vertices
                        ):
                            report.failure = SweepFailure(
                                "cycle_uniformity",
                                "fully gentle complexification over a mixed modulation",
                                _instance_document(q, m, RelationSet.empty()),
                            )
                            report.elapsed = time.monotonic() - started
                            return report

            # gentle_transfer
            if uniform is not None:
                pair_of = {p: fibers_of_path(cq, p) for p in l2}
                for mask in range(1 << len(l2)):
                    chosen = [p for k, p in enumerate(l2) if mask >> k & 1]
                    report.instances += 1
                    base_rel = {p.arrows for p in chosen}
                    gamma_rel = {f.arrows for p in chosen for f in pair_of[p]}
                    for v in q.vertices:
                        base_gentle = gentle_vertex_witness(q, base_rel, v) is None
                        fibers_gentle = all(
                            gentle_vertex_witness(gamma, gamma_rel, fv) is None
                            for fv in cq.vertex_fibers[v]
                        )
                        if base_gentle != fibers_gentle:
                            report.failure = SweepFailure(
                                "gentle_transfer",
                                f"vertex {v}: base gentle={base_gentle}, "
                                f"fibers gentle={fibers_gentle}",
                                _instance_document(
                                    q, m, RelationSet.of_monomials(chosen)
                                ),
                            )
                            report.elapsed = time.monotonic() - started
                            return report
                report.bump("gentle_transfer", 1 << len(l2))
    report.elapsed = time.monotonic() - started
    return report

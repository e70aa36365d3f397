"""Property-based checks over randomly generated small instances."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from modquiver import (
    Direction,
    Modulation,
    Quiver,
    RelationSet,
    Ring,
    build_gamma,
    chain_of,
    connected_components,
    enumerate_paths,
    fibers_of_path,
    find_cycle,
    flip_at_vertex,
    is_one_cycle,
    orbit_quiver,
    path_real_dim,
    transport_ideal,
)
from modquiver.quiver import step_endpoints

VERTICES = "uvwx"


@st.composite
def quivers(draw, max_vertices: int = 4, max_arrows: int = 5) -> Quiver:
    n = draw(st.integers(1, max_vertices))
    names = VERTICES[:n]
    arrow_count = draw(st.integers(0, max_arrows))
    arrows = []
    for k in range(arrow_count):
        src = draw(st.sampled_from(names))
        dst = draw(st.sampled_from(names))
        arrows.append((f"a{k}", src, dst))
    return Quiver.build(names, arrows)


@st.composite
def modulated_quivers(draw) -> tuple[Quiver, Modulation]:
    q = draw(quivers())
    rings = {v: draw(st.sampled_from(list(Ring))) for v in q.vertices}
    cc = [
        a.name
        for a in q.arrows
        if rings[a.source] is Ring.C and rings[a.target] is Ring.C
    ]
    conj = frozenset(n for n in cc if draw(st.booleans()))
    return q, Modulation(rings, conj)


@st.composite
def chains(draw) -> tuple[Quiver, tuple]:
    q = draw(quivers())
    if not q.arrows:
        return q, ()
    steps = []
    used: set[str] = set()
    at = draw(st.sampled_from(q.vertices))
    for _ in range(draw(st.integers(1, 4))):
        options = [
            (a.name, d)
            for a in q.arrows
            if a.name not in used
            for d in (Direction.FORWARD, Direction.BACKWARD)
            if step_endpoints(q, (a.name, d))[0] == at
        ]
        if not options:
            break
        step = draw(st.sampled_from(options))
        steps.append(step)
        used.add(step[0])
        at = step_endpoints(q, step)[1]
    return q, tuple(steps)


@given(quivers())
def test_one_cycle_iff_connected_and_balanced(q: Quiver):
    expected = bool(q.vertices) and q.is_connected and len(q.arrows) == len(q.vertices)
    assert is_one_cycle(q) == expected


@given(quivers())
def test_components_partition_the_quiver(q: Quiver):
    parts = connected_components(q)
    assert sorted(v for p in parts for v in p.vertices) == list(q.vertices)
    assert sorted(a.name for p in parts for a in p.arrows) == [
        a.name for a in q.arrows
    ]


@given(quivers(max_vertices=3, max_arrows=4))
def test_enumerated_paths_are_valid_and_complete(q: Quiver):
    paths = enumerate_paths(q, 3)
    seen = set()
    for p in paths:
        assert p.arrows not in seen
        seen.add(p.arrows)
        assert q.arrow(p.arrows[0]).source == p.start
        assert q.arrow(p.arrows[-1]).target == p.end
        for x, y in zip(p.arrows, p.arrows[1:]):
            assert q.arrow(x).target == q.arrow(y).source


@given(chains())
def test_chain_reversal_is_an_involution(data):
    q, steps = data
    if not steps:
        return
    c = chain_of(q, steps)
    r = c.reversed()
    assert chain_of(q, r.steps) == r
    assert (r.start, r.end) == (c.end, c.start)
    assert r.reversed() == c


@given(modulated_quivers())
def test_complexification_bookkeeping(data):
    q, m = data
    cq = build_gamma(q, m)
    for v in cq.gamma.vertices:
        assert cq.tau_vertex[cq.tau_vertex[v]] == v
        assert cq.pi_vertex[cq.tau_vertex[v]] == cq.pi_vertex[v]
    for a in cq.gamma.arrows:
        assert cq.tau_arrow[cq.tau_arrow[a.name]] == a.name
    assert orbit_quiver(cq) == q


@given(modulated_quivers())
def test_fiber_counts_match_dimensions(data):
    q, m = data
    cq = build_gamma(q, m)
    for p in enumerate_paths(q, 3):
        factor = m.ring(p.start).fiber_factor * m.ring(p.end).fiber_factor
        assert len(fibers_of_path(cq, p)) * factor == path_real_dim(q, m, p)


@given(modulated_quivers())
def test_path_dim_multiplicativity(data):
    q, m = data
    for p in enumerate_paths(q, 3):
        if len(p) < 2:
            continue
        for cut in range(1, len(p)):
            from modquiver import Path

            first = Path(p.arrows[:cut], p.start, q.arrow(p.arrows[cut - 1]).target)
            second = Path(p.arrows[cut:], q.arrow(p.arrows[cut]).source, p.end)
            junction = m.ring(first.end).real_dim
            assert (
                path_real_dim(q, m, p)
                == path_real_dim(q, m, first) * path_real_dim(q, m, second) // junction
            )


@st.composite
def c_uniform_instances(draw) -> tuple[Quiver, Modulation]:
    q = draw(quivers(max_vertices=3, max_arrows=4))
    conj = frozenset(a.name for a in q.arrows if draw(st.booleans()))
    return q, Modulation.uniform(q, Ring.C, conj=conj)


@given(c_uniform_instances(), st.data())
@settings(max_examples=60)
def test_flip_involution_and_closed_chain_parity(data, picker):
    q, m = data
    flippable = [
        v for v in q.vertices if not any(a.target == v for a in q.out_arrows(v))
    ]
    if not flippable:
        return
    v = picker.draw(st.sampled_from(flippable))
    flipped = flip_at_vertex(q, m, v)
    assert flip_at_vertex(q, flipped, v) == m
    # parity of conjugated arrows along the cycle is preserved
    if is_one_cycle(q):
        cycle = find_cycle(q)
        assert cycle is not None
        before = sum(1 for n in cycle.arrow_names if m.is_conj(n)) % 2
        after = sum(1 for n in cycle.arrow_names if flipped.is_conj(n)) % 2
        assert before == after


@given(c_uniform_instances(), st.data())
@settings(max_examples=60)
def test_transport_is_involution_stable(data, picker):
    q, m = data
    l2 = [p for p in enumerate_paths(q, 2) if len(p) == 2] if q.arrows else []
    if not l2:
        return
    chosen = picker.draw(st.sets(st.sampled_from(l2), max_size=len(l2)))
    rels = RelationSet(frozenset(chosen))
    cq = build_gamma(q, m)
    j = transport_ideal(q, m, rels, cq)
    assert {cq.tau_of_path(p) for p in j.monomials} == set(j.monomials)

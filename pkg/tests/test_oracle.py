"""Enumeration, isomorphism search, and quick sweeps at small bounds."""

from __future__ import annotations

from itertools import combinations_with_replacement

import pytest

from modquiver import (
    Modulation,
    Quiver,
    Ring,
    SweepConfig,
    fiber_count_oracle,
    quiver_isomorphic,
)
from modquiver.oracle import (
    enumerate_connected_quivers,
    enumerate_modulations,
    iter_relation_sets,
    omega_configs,
    sweep_equivalence,
    sweep_fiber_counts,
    sweep_implications,
    sweep_structure,
)

from _helpers import chain_example, hub_example
from modquiver import ScalarClass


def brute_force_class_count(n: int, m: int) -> int:
    """Connected quivers with exactly n vertices and m arrows up to
    isomorphism, counted by explicit pairwise isomorphism grouping."""
    names = "abcd"
    pairs = [(i, j) for i in range(n) for j in range(n)]
    reps: list[Quiver] = []
    for combo in combinations_with_replacement(pairs, m):
        q = Quiver.build(
            names[:n],
            [(f"x{k}", names[i], names[j]) for k, (i, j) in enumerate(combo)],
        )
        if len(q.component_vertex_sets) != 1:
            continue
        if not any(quiver_isomorphic(q, r) for r in reps):
            reps.append(q)
    return len(reps)


def test_quiver_isomorphic_basics():
    q = Quiver.build("ab", [("x", "a", "b")])
    iso = quiver_isomorphic(q, q)
    assert iso is not None
    assert dict(iso.vertex_map) == {"a": "a", "b": "b"}
    other = Quiver.build("uv", [("y", "v", "u")])
    mapping = quiver_isomorphic(q, other)
    assert mapping is not None
    assert dict(mapping.vertex_map) == {"a": "v", "b": "u"}
    assert dict(mapping.arrow_map) == {"x": "y"}
    assert quiver_isomorphic(q, Quiver.build("abc", [("x", "a", "b")])) is None
    # orientation matters
    two_out = Quiver.build("abc", [("x", "a", "b"), ("y", "a", "c")])
    two_in = Quiver.build("abc", [("x", "b", "a"), ("y", "c", "a")])
    assert quiver_isomorphic(two_out, two_in) is None


def test_quiver_isomorphic_respects_multiplicity():
    double = Quiver.build("ab", [("x", "a", "b"), ("y", "a", "b")])
    split = Quiver.build("ab", [("x", "a", "b"), ("y", "b", "a")])
    assert quiver_isomorphic(double, split) is None
    mapping = quiver_isomorphic(
        double, Quiver.build("uv", [("p", "u", "v"), ("q", "u", "v")])
    )
    assert mapping is not None
    assert set(dict(mapping.arrow_map)) == {"x", "y"}


def test_enumeration_matches_brute_force_counts():
    enumerated: dict[tuple[int, int], int] = {}
    for q in enumerate_connected_quivers(3, 3):
        key = (len(q.vertices), len(q.arrows))
        enumerated[key] = enumerated.get(key, 0) + 1
    for n in (1, 2, 3):
        for m in range(n - 1 if n > 1 else 0, 4):
            assert enumerated.get((n, m), 0) == brute_force_class_count(n, m), (n, m)


def test_enumeration_is_irredundant():
    quivers = enumerate_connected_quivers(3, 3)
    by_size: dict[tuple[int, int], list[Quiver]] = {}
    for q in quivers:
        by_size.setdefault((len(q.vertices), len(q.arrows)), []).append(q)
    for bin_ in by_size.values():
        for i, a in enumerate(bin_):
            for b in bin_[i + 1 :]:
                assert quiver_isomorphic(a, b) is None


def test_enumerate_modulations_counts():
    q = Quiver.build("ab", [("x", "a", "b")])
    mods = enumerate_modulations(q)
    # three rings per vertex, one conjugation bit when both ends are C
    assert len(mods) == 3 * 3 + 1
    uniform = enumerate_modulations(q, uniform_only=True)
    assert len(uniform) == 2 + 2
    for m in mods:
        from modquiver import validate

        assert validate(q, m) == []


def test_omega_configs_on_hub():
    q = hub_example(ScalarClass.REAL)[0]
    configs = omega_configs(q)
    assert len(configs) == 1
    cfg = configs[0]
    assert (cfg.hub, cfg.cycle, cfg.beta, cfg.gamma) == ("j", ("b",), "a", "c")


def test_omega_configs_two_cycle_detour():
    q = Quiver.build(
        "uvwx",
        [("a", "u", "v"), ("b", "v", "w"), ("c", "w", "v"), ("d", "v", "x")],
    )
    configs = omega_configs(q)
    assert any(cfg.hub == "v" and cfg.cycle == ("b", "c") for cfg in configs)


def test_iter_relation_sets_counts():
    q, m, _ = hub_example(ScalarClass.CENTRAL)
    rels = list(iter_relation_sets(q, m, include_omega=True))
    # four length-two paths, one attachment site, two quaternion scalars
    assert sum(1 for r in rels if not r.binomials) == 16
    assert sum(1 for r in rels if r.binomials) == 32
    mono_only = list(iter_relation_sets(q, m, include_omega=False))
    assert len(mono_only) == 16
    # over R the central scalar is the only choice
    rels_r = list(iter_relation_sets(q, Modulation.uniform(q, Ring.R), True))
    assert sum(1 for r in rels_r if r.binomials) == 16
    # no binomials over a C-uniform modulation
    rels_c = list(iter_relation_sets(q, Modulation.uniform(q, Ring.C), True))
    assert sum(1 for r in rels_c if r.binomials) == 0


def test_fiber_count_oracle_examples():
    q, m = chain_example()
    assert fiber_count_oracle(q, m, 4) is None
    hub_q, hub_m, _ = hub_example(ScalarClass.REAL)
    assert fiber_count_oracle(hub_q, hub_m, 4) is None


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(max_path_len=1)
    with pytest.raises(ValueError):
        SweepConfig(max_vertices=0)


def test_small_sweeps_are_clean():
    cfg = SweepConfig(
        max_vertices=2, max_arrows=2, max_path_len=4, uniform_only=True
    )
    eq = sweep_equivalence(cfg)
    assert eq.ok, eq.failure
    assert eq.counts.get("real_true", 0) > 0
    # binomial attachment sites need at least three arrows
    eq3 = sweep_equivalence(
        SweepConfig(max_vertices=3, max_arrows=3, max_path_len=4, uniform_only=True)
    )
    assert eq3.ok, eq3.failure
    assert eq3.counts.get("binomial_instances", 0) > 0

    fibers = sweep_fiber_counts(
        SweepConfig(max_vertices=2, max_arrows=2, max_path_len=4, uniform_only=False)
    )
    assert fibers.ok, fibers.failure

    structure = sweep_structure(
        SweepConfig(max_vertices=2, max_arrows=2, max_path_len=4, uniform_only=False)
    )
    assert structure.ok, structure.failure

    implications = sweep_implications(cfg)
    assert implications.ok, implications.failure
    assert implications.counts.get("ring_propagation", 0) > 0


def test_equivalence_sweep_over_mixed_modulations():
    # mixed modulations with relations can be undecidable (no transport
    # rule); those are tallied, not reported as counterexamples
    cfg = SweepConfig(
        max_vertices=2, max_arrows=2, max_path_len=4, uniform_only=False
    )
    rep = sweep_equivalence(cfg)
    assert rep.ok, rep.failure
    assert rep.counts.get("undecided", 0) > 0

    uniform = sweep_equivalence(
        SweepConfig(max_vertices=2, max_arrows=2, max_path_len=4, uniform_only=True)
    )
    assert uniform.counts.get("undecided", 0) == 0


def test_one_vertex_sweep_covers_loop_example():
    cfg = SweepConfig(max_vertices=1, max_arrows=1, max_path_len=4)
    rep = sweep_equivalence(cfg)
    assert rep.ok
    # loop quiver with rings R, C (two conjugation choices), H and the
    # empty vertex; each loop modulation sees two relation subsets
    assert rep.counts.get("real_true", 0) >= 3

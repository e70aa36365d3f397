"""Shared builders for the worked examples used across the test suite."""

from __future__ import annotations

from modquiver import (
    Binomial,
    Modulation,
    Quiver,
    RelationSet,
    Ring,
    ScalarClass,
    path_of,
)


def chain_example() -> tuple[Quiver, Modulation]:
    """Four vertices H, R, C, H along a directed chain."""
    q = Quiver.build("ijkl", [("a", "i", "j"), ("b", "j", "k"), ("c", "k", "l")])
    m = Modulation({"i": Ring.H, "j": Ring.R, "k": Ring.C, "l": Ring.H})
    return q, m


def conj_loop_example() -> tuple[Quiver, Modulation, RelationSet]:
    """A conjugated loop on a complex vertex, bound by the loop squared."""
    q = Quiver.build(["i"], [("a", "i", "i")])
    m = Modulation({"i": Ring.C}, frozenset({"a"}))
    rels = RelationSet.of_monomials([path_of(q, ("a", "a"))])
    return q, m, rels


def hub_example(scalar: ScalarClass) -> tuple[Quiver, Modulation, RelationSet]:
    """H-uniform quiver i -> j (loop b) -> k with one binomial generator."""
    q = Quiver.build("ijk", [("a", "i", "j"), ("b", "j", "j"), ("c", "j", "k")])
    m = Modulation.uniform(q, Ring.H)
    rels = RelationSet(
        frozenset({path_of(q, ("b", "b"))}),
        frozenset({Binomial(path_of(q, ("a", "c")), path_of(q, ("a", "b", "c")), scalar)}),
    )
    return q, m, rels


def std_pair_example() -> tuple[Quiver, Modulation]:
    """Two parallel arrows between C vertices, one plain and one conjugated."""
    q = Quiver.build("ij", [("a", "i", "j"), ("b", "i", "j")])
    m = Modulation({"i": Ring.C, "j": Ring.C}, frozenset({"b"}))
    return q, m

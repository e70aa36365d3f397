"""The text format, round-tripping, and the command line surface."""

from __future__ import annotations

import json
from pathlib import Path as FsPath

import pytest

from modquiver import (
    Document,
    ParseError,
    Ring,
    ScalarClass,
    build_instance,
    document_of,
    parse,
    serialize,
)
from modquiver.cli import main
from modquiver.oracle import (
    enumerate_connected_quivers,
    enumerate_modulations,
    iter_relation_sets,
)

DATA = FsPath(__file__).parent / "data"


def read(name: str) -> str:
    return (DATA / name).read_text(encoding="utf-8")


# -- parsing -------------------------------------------------------------------


def test_parse_conj_loop():
    doc = parse(read("conj_loop.mq"))
    assert doc.name == "conj-loop"
    q, m, rels = build_instance(doc)
    assert q.vertices == ("i",)
    assert m.ring("i") is Ring.C and m.is_conj("a")
    (mono,) = rels.monomials
    assert mono.arrows == ("a", "a")


def test_parse_hub_noncentral():
    doc = parse(read("hub_noncentral.mq"))
    q, m, rels = build_instance(doc)
    assert len(rels.binomials) == 1
    b = next(iter(rels.binomials))
    assert (str(b.left), str(b.right)) == ("c*a", "c*b*a")
    assert b.scalar is ScalarClass.NONCENTRAL
    from modquiver import transport_ideal, build_gamma

    j = transport_ideal(q, m, rels, build_gamma(q, m))
    assert {str(p) for p in j.monomials} == {"c*a", "c*b*a", "b*b"}


def test_parse_empty_and_comments():
    doc = parse("# just a comment\n\n")
    assert doc == Document(comments=("just a comment",))
    assert parse("") == Document()


def test_parse_errors_are_positioned():
    with pytest.raises(ParseError) as err:
        parse("vertex i : X\n")
    assert err.value.line == 1 and err.value.column == 12

    with pytest.raises(ParseError) as err:
        parse("vertex i : C\narrow a : i -> w\n")
    assert err.value.line == 2 and "unknown vertex 'w'" in err.value.message

    with pytest.raises(ParseError) as err:
        parse("vertex i : R\nvertex j : C\narrow a : i -> j conj\n")
    assert err.value.line == 3 and "C-C endpoints" in err.value.message

    with pytest.raises(ParseError) as err:
        parse("vertex i : C\narrow a : i -> i\nrel a\n")
    assert err.value.line == 3 and "length at least two" in err.value.message

    with pytest.raises(ParseError) as err:
        parse("vertex i : C\narrow a : i -> i\nrel a*b\n")
    assert "unknown arrow 'b'" in err.value.message

    with pytest.raises(ParseError) as err:
        parse("gibberish here\n")
    assert err.value.line == 1

    with pytest.raises(ParseError) as err:
        parse("vertex i : C\narrow a : i -> i\nrel a*a - (weird) a*a*a\n")
    assert "unknown scalar class" in err.value.message


def test_parse_rejects_non_composable_relation():
    text = "vertex i : R\nvertex j : R\nvertex k : R\n" \
           "arrow a : i -> j\narrow b : k -> j\nrel b*a\n"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert "do not compose" in err.value.message


def test_roundtrip_on_data_files():
    for name in ("chain.mq", "conj_loop.mq", "hub_central.mq", "hub_noncentral.mq"):
        doc = parse(read(name))
        assert parse(serialize(doc)) == doc


def test_roundtrip_over_enumerated_instances():
    for q in enumerate_connected_quivers(2, 3):
        for m in enumerate_modulations(q)[:6]:
            for rels in list(iter_relation_sets(q, m, include_omega=True))[:8]:
                doc = document_of(q, m, rels)
                assert parse(serialize(doc)) == doc
                q2, m2, rels2 = build_instance(doc)
                assert (q2, m2.vertex_ring, m2.conj_arrows, rels2) == (
                    q,
                    m.vertex_ring,
                    m.conj_arrows,
                    rels,
                )


# -- commands ------------------------------------------------------------------


def run_cli(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_cli_complexify_matches_golden(capsys):
    code, out = run_cli(capsys, "complexify", str(DATA / "chain.mq"))
    assert code == 0
    assert out == read("golden_complexify_chain.txt")


def test_cli_complexify_json_and_dot(tmp_path, capsys):
    dot_file = tmp_path / "gamma.dot"
    code, out = run_cli(
        capsys, "complexify", str(DATA / "chain.mq"), "--json", "--dot", str(dot_file)
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["gamma.vertex_count"] == 5
    assert payload["gamma.arrow.c~"] == "k~ l bar"
    first = dot_file.read_bytes()
    code, _ = run_cli(
        capsys, "complexify", str(DATA / "chain.mq"), "--json", "--dot", str(dot_file)
    )
    assert dot_file.read_bytes() == first


def test_cli_check_consistent(capsys):
    code, out = run_cli(capsys, "check", str(DATA / "conj_loop.mq"))
    assert code == 0
    assert "consistent: true" in out
    assert "verdict: DerivedDiscrete-GentleOneCycle" in out


def test_cli_check_json_stable(capsys):
    code, first = run_cli(capsys, "check", str(DATA / "hub_central.mq"), "--json")
    assert code == 0
    code, second = run_cli(capsys, "check", str(DATA / "hub_central.mq"), "--json")
    assert first == second
    payload = json.loads(first)
    assert payload["consistent"] is True
    assert payload["real.value"] is True


def test_cli_check_unsupported_fragment(capsys, tmp_path):
    text = (
        "vertex i : C\narrow a : i -> i conj\n"
        "rel a*a - (complex) a*a*a*a\n"
    )
    f = tmp_path / "unsupported.mq"
    f.write_text(text, encoding="utf-8")
    code, out = run_cli(capsys, "check", str(f))
    assert code == 3


def test_cli_classify(capsys):
    code, out = run_cli(capsys, "classify", str(DATA / "hub_noncentral.mq"))
    assert code == 0
    assert "verdict: Inconclusive" in out
    code, out = run_cli(capsys, "classify", str(DATA / "hub_central.mq"))
    assert code == 0
    assert "verdict: DerivedDiscrete-GentleOneCycle" in out


def test_cli_classify_kronecker_inconclusive(capsys, tmp_path):
    f = tmp_path / "kronecker.mq"
    f.write_text(
        "vertex u : R\nvertex v : R\narrow a : u -> v\narrow b : u -> v\n",
        encoding="utf-8",
    )
    code, out = run_cli(capsys, "classify", str(f))
    assert code == 0
    assert "verdict: Inconclusive" in out


def test_cli_normalize(capsys, tmp_path):
    f = tmp_path / "cycle.mq"
    f.write_text(
        "vertex u : C\nvertex v : C\nvertex w : C\n"
        "arrow a : u -> v\narrow b : v -> w\narrow c : w -> u conj\n"
        "arrow d : v -> v\n",
        encoding="utf-8",
    )
    # a loop at v makes this not one-cycle; expect unsupported
    code, _ = run_cli(capsys, "normalize", str(f))
    assert code == 3
    f.write_text(
        "vertex u : C\nvertex v : C\nvertex w : C\n"
        "arrow a : u -> v conj\narrow b : v -> w conj\narrow c : w -> u\n",
        encoding="utf-8",
    )
    code, out = run_cli(capsys, "normalize", str(f))
    assert code == 0
    doc = parse(out)
    assert all(not a.conj for a in doc.arrows)


def test_cli_oracle(capsys):
    code, out = run_cli(capsys, "oracle", str(DATA / "chain.mq"), "--max-len", "4")
    assert code == 0
    assert "match" in out


def test_cli_sweep(capsys):
    code, out = run_cli(
        capsys, "sweep", "--max-vertices", "2", "--max-arrows", "2"
    )
    assert code == 0
    for label in ("equivalence", "fiber_counts", "structure", "implications"):
        assert f"{label}: ok" in out


def test_cli_parse_error_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.mq"
    f.write_text("vertex i : X\n", encoding="utf-8")
    code = main(["check", str(f)])
    captured = capsys.readouterr()
    assert code == 2
    assert "line 1" in captured.err


def test_cli_empty_document_rejected(capsys, tmp_path):
    f = tmp_path / "empty.mq"
    f.write_text("# nothing\n", encoding="utf-8")
    code = main(["classify", str(f)])
    captured = capsys.readouterr()
    assert code == 3
    assert "empty" in captured.err


def test_cli_missing_file(capsys):
    code = main(["check", "/nonexistent/file.mq"])
    captured = capsys.readouterr()
    assert code == 2
    assert "error" in captured.err

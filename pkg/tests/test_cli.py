import json
import subprocess
import sys
from pathlib import Path

import pytest

from graphcats.cli import CAP, FAIL, OK, USAGE, main
from graphcats.structures import object_from_json

CORPUS = Path(__file__).parent / "corpus"


def c(name):
    return str(CORPUS / name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------- validate

@pytest.mark.parametrize("name", ["G3.json", "G3_reordered.json", "structured.json", "sym_digraph.json", "set_system.json", "FLAG.json"])
def test_validate_ok(capsys, name):
    code, out, _ = run(capsys, "validate", c(name))
    assert code == OK and "valid" in out


def test_validate_predicate_from_kind(capsys):
    code, out, _ = run(capsys, "validate", c("multigraph_bad.json"))
    assert code == FAIL and "violation" in out


def test_validate_predicate_flag(capsys):
    assert run(capsys, "validate", c("G3.json"), "--predicate", "multigraph")[0] == FAIL
    assert run(capsys, "validate", c("not_symmetric.json"))[0] == FAIL
    assert run(capsys, "validate", c("dangling.json"))[0] == FAIL


def test_validate_json(capsys):
    code, out, _ = run(capsys, "validate", c("G3.json"), "--predicate", "multigraph", "--json")
    doc = json.loads(out)
    assert code == FAIL and doc["valid"] is False and len(doc["violations"]) == 1


@pytest.mark.parametrize("name", ["malformed.json", "unknown_kind.json", "no_such_file.json"])
def test_validate_bad_input_is_usage_error(capsys, name):
    code, _, err = run(capsys, "validate", c(name))
    assert code == USAGE and "error" in err


# ---------------------------------------------------------------- apply

def test_apply_gamma(capsys):
    code, out, _ = run(capsys, "apply", "gamma", c("G3.json"))
    assert code == OK
    doc = json.loads(out)
    assert doc["kind"] == "simple-graph"
    assert sorted(map(sorted, doc["edges"])) == [["0", "1"], ["0", "2"], ["1", "2"]]


def test_apply_pipeline_to_file(capsys, tmp_path):
    out_file = tmp_path / "out.json"
    code, out, _ = run(capsys, "apply", "incl_weak,dual_ddag", c("Gd.json"), "--out", str(out_file))
    assert code == OK and out == ""
    obj, _ = object_from_json(json.loads(out_file.read_text()))
    assert {v.name for v in obj.vertices} == {"e", "f"}


def test_apply_with_category(capsys):
    code, out, _ = run(capsys, "apply", "dual_ddag", c("Gd.json"), "--category", "H+")
    assert code == OK
    code, out, _ = run(capsys, "apply", "intersect_factored", c("GL.json"), "--category", "H")
    assert code == OK
    assert len(json.loads(out)["edges"]) == 3


def test_apply_empty_pipeline_copies(capsys):
    code, out, _ = run(capsys, "apply", "", c("G3.json"))
    obj, _ = object_from_json(json.loads(out))
    ref, _ = object_from_json(json.loads((CORPUS / "G3.json").read_text()))
    assert code == OK and obj == ref


def test_apply_rejects_bad_pipelines(capsys):
    code, _, err = run(capsys, "apply", "simp_Q", c("G3.json"))
    assert code == FAIL and "stage 1" in err
    code, _, err = run(capsys, "apply", "gamma,gamma", c("G3.json"))
    assert code == FAIL and "stage 2" in err
    assert run(capsys, "apply", "frobnicate", c("G3.json"))[0] == USAGE
    assert run(capsys, "apply", "gamma", c("G3.json"), "--category", "Top")[0] == USAGE


def test_apply_rejects_predicate_failure(capsys):
    code, _, err = run(capsys, "apply", "assoc_D", c("G3.json"), "--category", "M")
    assert code == FAIL and "not an object of M" in err


# ---------------------------------------------------------------- homs

def test_homs_count(capsys):
    assert run(capsys, "homs", "strict-ssh", c("G3.json"), c("H2.json"), "--count")[1].strip() == "6"
    assert run(capsys, "homs", "strict", c("Gd.json"), c("Hd.json"), "--count")[1].strip() == "8"
    assert run(capsys, "homs", "ssys", c("K3.json"), c("K2.json"), "--count")[1].strip() == "0"


def test_homs_exists(capsys):
    code, out, _ = run(capsys, "homs", "weak", c("WEAK_SRC.json"), c("WEAK_TGT.json"), "--exists")
    assert code == OK and out.strip() == "true"
    assert run(capsys, "homs", "strict", c("WEAK_SRC.json"), c("WEAK_TGT.json"), "--exists")[1].strip() == "false"


def test_homs_enumerate(capsys):
    code, out, _ = run(capsys, "homs", "strict-ssh", c("GL.json"), c("HL.json"))
    homs = json.loads(out)
    assert code == OK and len(homs) == 2
    assert all(h["kind"] == "strict-ssh" and "vertex_map" in h and "edge_map" in h for h in homs)


def test_homs_caps(capsys):
    code, _, err = run(capsys, "homs", "strict-ssh", c("G3.json"), c("H2.json"), "--caps", "2,6,12")
    assert code == CAP and "cap" in err
    assert run(capsys, "homs", "strict-ssh", c("G3.json"), c("H2.json"), "--caps", "x")[0] == USAGE
    assert run(capsys, "homs", "strict-ssh", c("G3.json"), c("H2.json"), "--caps", "0,1,1")[0] == USAGE


def test_homs_kind_errors(capsys):
    assert run(capsys, "homs", "bogus", c("G3.json"), c("H2.json"))[0] == USAGE
    assert run(capsys, "homs", "quiver", c("G3.json"), c("H2.json"))[0] == FAIL


# ---------------------------------------------------------------- laws and counterexamples

@pytest.mark.parametrize("name", ["cx-gamma", "cx-line", "cx-dual", "cx-weak"])
def test_counterexample(capsys, name):
    code, out, _ = run(capsys, "counterexample", name)
    assert code == OK and out.startswith("PASS")


def test_counterexample_json(capsys):
    code, out, _ = run(capsys, "counterexample", "CX-GAMMA", "--json")
    doc = json.loads(out)
    assert code == OK and doc["reports"][0]["counts"] == [6, 0]


def test_unknown_counterexample(capsys):
    assert run(capsys, "counterexample", "cx-nope")[0] == USAGE


def test_laws_suite(capsys):
    code, out, _ = run(capsys, "laws", "--suite", "compatibility", "--cases", "10")
    assert code == OK
    assert "6/6 passed" in out


def test_laws_json(capsys):
    code, out, _ = run(capsys, "laws", "--suite", "involutions", "--cases", "10", "--json")
    doc = json.loads(out)
    assert code == OK and doc["passed"] and len(doc["reports"]) == 3


def test_laws_unknown_suite(capsys):
    assert run(capsys, "laws", "--suite", "nope")[0] == USAGE


# ---------------------------------------------------------------- dot and fixtures

def test_dot_is_deterministic(capsys):
    first = run(capsys, "dot", c("G3.json"))[1]
    second = run(capsys, "dot", c("G3_reordered.json"))[1]
    assert first == second
    assert first.startswith('graph "G" {') and "shape=box" in first


@pytest.mark.parametrize("name,head", [
    ("Q1.json", "digraph"),
    ("sym_digraph.json", "digraph"),
    ("set_system.json", "graph"),
    ("FLAG_HYP.json", "graph"),
    ("FLAG.json", "graph"),
])
def test_dot_kinds(capsys, name, head):
    code, out, _ = run(capsys, "dot", c(name))
    assert code == OK and out.split()[0] == head and out.rstrip().endswith("}")


def test_fixture_listing_and_export(capsys, tmp_path):
    code, out, _ = run(capsys, "fixture")
    assert code == OK and "G3" in out.split()
    path = tmp_path / "g3.json"
    assert run(capsys, "fixture", "G3", "--out", str(path))[0] == OK
    obj, _ = object_from_json(json.loads(path.read_text()))
    ref, _ = object_from_json(json.loads((CORPUS / "G3.json").read_text()))
    assert obj == ref
    assert run(capsys, "fixture", "G9")[0] == USAGE


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "graphcats.cli", "homs", "strict-ssh", c("G3.json"), c("H2.json"), "--count"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "6"


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_apply_long_pipeline_equals_intersect_factored(capsys):
    from graphcats.fixtures import GL
    from graphcats.functors import intersect_factored

    code, out, _ = run(capsys, "apply", "incl_weak,dual_ddag,simplicial_repl,del_M,simp_M", c("GL.json"))
    obj, _ = object_from_json(json.loads(out))
    assert code == OK and obj == intersect_factored(GL)


@pytest.mark.parametrize("pipeline,cat", [
    ("simp_H,del_S,simplicial_closure", "H"),
    ("under_U,assoc_D,assoc_inc,dual_sharp", "Q"),
    ("weak_of,dual_top,emb_R,clique_quiver,simp_Q,sym_closure", "H+"),
])
def test_apply_matches_library_composition(capsys, tmp_path, pipeline, cat):
    from graphcats.functors import composite
    from graphcats.laws.generators import InstanceGenerator
    from graphcats.structures import object_to_json

    gen = InstanceGenerator(cat, seed=9)
    f = composite(*pipeline.split(","))
    for k in range(5):
        x = gen.object()
        path = tmp_path / f"in{k}.json"
        path.write_text(json.dumps(object_to_json(x)))
        code, out, _ = run(capsys, "apply", pipeline, str(path), "--category", cat)
        assert code == OK
        assert object_from_json(json.loads(out))[0] == f(x)


def test_homs_on_gamma_images(capsys, tmp_path):
    for src in ("G3", "H2"):
        run(capsys, "apply", "gamma", c(f"{src}.json"), "--out", str(tmp_path / f"{src}.json"))
    code, out, _ = run(capsys, "homs", "ssys", str(tmp_path / "G3.json"), str(tmp_path / "H2.json"), "--count")
    assert code == OK and out.strip() == "0"


def test_homs_identity_pair_exists(capsys):
    assert run(capsys, "homs", "quiver", c("Q1.json"), c("Q1.json"), "--exists")[1].strip() == "true"


def test_dot_digraph_arcs(capsys):
    code, out, _ = run(capsys, "dot", c("D1.json"))
    assert code == OK and out.count("->") == 2


def test_dot_hyperedge_box(capsys):
    out = run(capsys, "dot", c("G3.json"))[1]
    assert '"e:e" [shape=box' in out
    assert all(f'"e:e" -- "v:{v}"' in out for v in range(3))


def test_dot_parse_error(capsys):
    assert run(capsys, "dot", c("malformed.json"))[0] == USAGE

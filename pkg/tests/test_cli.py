import json

import pytest

import latq
import latq.suite
from latq import cli, docio
from latq.suite import Cell, SuiteReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def c3_file(tmp_path, zoo):
    path = tmp_path / "c3.json"
    docio.save_lattice(zoo["c3"], str(path))
    return str(path)


@pytest.fixture()
def b2_file(tmp_path, zoo):
    path = tmp_path / "b2.json"
    docio.save_lattice(zoo["b2"], str(path))
    return str(path)


def map_file(tmp_path, lat_file, name, values):
    path = tmp_path / f"{name}.json"
    ref = lat_file.rsplit("/", 1)[-1]
    path.write_text(docio.dumps(
        {"dom": ref, "cod": ref, "values": values}))
    return str(path)


# ------------------------------------------------------------------- gen

def test_gen_shapes(capsys, tmp_path):
    for argv, name, n in (
        (("gen", "chain", "4"), "c4", 4),
        (("gen", "boolean", "3"), "b3", 8),
        (("gen", "m3"), "m3", 5),
        (("gen", "n5"), "n5", 5),
        (("gen", "product", "2", "3"), "c2xc3", 6),
    ):
        code, out, err = run(capsys, *argv)
        assert code == 0 and err == ""
        doc = json.loads(out)
        assert doc["name"] == name and doc["n"] == n


def test_gen_random_is_deterministic(capsys):
    code, first, _ = run(capsys, "gen", "random", "--seed", "5", "--size", "6")
    assert code == 0
    code, second, _ = run(capsys, "gen", "random", "--seed", "5",
                          "--size", "6")
    assert code == 0
    assert first == second
    code, third, _ = run(capsys, "gen", "random", "--seed", "6", "--size", "6")
    assert code == 0
    assert json.loads(third)["name"] != json.loads(first)["name"]


def test_gen_output_file_matches_stdout(capsys, tmp_path):
    out_file = tmp_path / "L.json"
    code, _, _ = run(capsys, "gen", "chain", "3", "-o", str(out_file))
    assert code == 0
    code, streamed, _ = run(capsys, "gen", "chain", "3")
    assert code == 0
    assert out_file.read_text() == streamed


def test_gen_downsets(capsys, tmp_path):
    poset = tmp_path / "vee.json"
    poset.write_text(docio.dumps(
        {"name": "vee", "n": 3, "covers": [[0, 1], [0, 2]]}))
    code, out, _ = run(capsys, "gen", "downsets", str(poset))
    assert code == 0
    doc = json.loads(out)
    assert doc["name"] == "downsets_vee"
    assert doc["n"] == 5


def test_gen_rejections(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "chain", "0")
    assert code == 2 and "error:" in err
    bad = tmp_path / "bad.json"
    bad.write_text(docio.dumps({"name": "x", "n": 3}))
    code, _, err = run(capsys, "gen", "downsets", str(bad))
    assert code == 2 and "covers" in err


# ----------------------------------------------------------------- check

def test_check_text(capsys, tmp_path, zoo):
    path = tmp_path / "m3.json"
    docio.save_lattice(zoo["m3"], str(path))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert "name: m3" in out
    assert "completely_distributive: False" in out
    assert "raney_join_criterion: fails" in out
    assert "criteria agree: True" in out
    assert "ms]" not in out
    code, timed, _ = run(capsys, "check", str(path), "--timing")
    assert code == 0 and "ms]" in timed


def test_check_json(capsys, c3_file):
    code, out, _ = run(capsys, "check", c3_file, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["criteria_agree"] is True
    assert doc["profile"]["chain"] is True
    assert doc["profile"]["join_primes"] == [1, 2]
    assert [c["name"] for c in doc["criteria"]] == [
        "raney_join_criterion", "raney_meet_criterion",
        "distributive_oracle"]
    assert all(c["holds"] for c in doc["criteria"])


def test_check_bad_inputs(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 2 and "error:" in err
    bowtie = tmp_path / "bowtie.json"
    bowtie.write_text(docio.dumps({
        "name": "x", "n": 5,
        "covers": [[0, 2], [1, 2], [0, 3], [1, 3], [2, 4], [3, 4]]}))
    code, _, err = run(capsys, "check", str(bowtie))
    assert code == 2 and "error:" in err


# ------------------------------------------------------------------- map

def test_map_specials(capsys, c3_file, b2_file):
    code, out, _ = run(capsys, "map", "o", c3_file)
    assert code == 0
    assert json.loads(out)["values"] == [0, 0, 1]
    code, out, _ = run(capsys, "map", "omega", c3_file)
    assert json.loads(out)["values"] == [1, 2, 2]
    code, out, _ = run(capsys, "map", "c", "2", c3_file)
    assert json.loads(out)["values"] == [0, 2, 2]
    code, out, _ = run(capsys, "map", "nu", "1", c3_file)
    assert json.loads(out)["values"] == [0, 0, 2]
    code, out, _ = run(capsys, "map", "alpha", "1", b2_file)
    assert json.loads(out)["values"] == [0, 3, 0, 3]
    code, _, err = run(capsys, "map", "c", "9", c3_file)
    assert code == 2 and "error:" in err


def test_map_adjoint_and_interior(capsys, tmp_path, c3_file, b2_file):
    o_file = map_file(tmp_path, c3_file, "o", [0, 0, 1])
    code, out, _ = run(capsys, "map", "adjoint", o_file)
    assert code == 0
    doc = json.loads(out)
    assert doc["values"] == [1, 2, 2]
    alpha_file = map_file(tmp_path, b2_file, "alpha_top", [0, 0, 0, 3])
    code, out, _ = run(capsys, "map", "adjoint", alpha_file)
    assert code == 0
    # meet- but not join-continuous: the left adjoint is produced
    assert json.loads(out)["values"] == [0, 3, 3, 3]
    code, out, _ = run(capsys, "map", "interior", alpha_file)
    assert json.loads(out)["values"] == [0, 0, 0, 0]
    broken = map_file(tmp_path, c3_file, "broken", [1, 0, 2])
    code, _, err = run(capsys, "map", "adjoint", broken)
    assert code == 2 and "error:" in err


def test_map_raney_transforms(capsys, tmp_path, c3_file):
    id_file = map_file(tmp_path, c3_file, "id", [0, 1, 2])
    code, out, _ = run(capsys, "map", "raney-join", id_file)
    assert json.loads(out)["values"] == [0, 0, 1]
    code, out, _ = run(capsys, "map", "raney-meet", id_file)
    assert json.loads(out)["values"] == [1, 2, 2]


def test_map_output_refs_relative_to_output_dir(tmp_path, capsys, c3_file):
    out_file = tmp_path / "out.json"
    code, _, _ = run(capsys, "map", "o", c3_file, "-o", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["dom"] == "c3.json" and doc["cod"] == "c3.json"
    back = docio.load_map(str(out_file))
    assert back.values.tolist() == [0, 0, 1]


# --------------------------------------------------------------------- q

def test_q_enumerate(capsys, c3_file):
    code, out, _ = run(capsys, "q", "enumerate", c3_file)
    assert code == 0 and out == "count 6\n"
    code, out, _ = run(capsys, "q", "enumerate", c3_file, "--list")
    lines = out.splitlines()
    assert lines[0] == "count 6"
    rows = sorted(json.loads(line) for line in lines[1:])
    assert rows == [[0, 0, 0], [0, 0, 1], [0, 0, 2],
                    [0, 1, 1], [0, 1, 2], [0, 2, 2]]


def test_q_enumerate_cap(capsys, c3_file):
    code, _, err = run(capsys, "q", "enumerate", c3_file, "--cap", "4")
    assert code == 2 and "cap" in err


def test_q_element_classes(capsys, c3_file):
    code, out, _ = run(capsys, "q", "cyclic", c3_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "count 2"
    assert sorted(json.loads(r) for r in lines[1:]) == [[0, 0, 1], [0, 2, 2]]
    code, out, _ = run(capsys, "q", "central", c3_file)
    lines = out.splitlines()
    assert lines[0] == "count 2"
    assert sorted(json.loads(r) for r in lines[1:]) == [[0, 0, 0], [0, 1, 2]]
    code, out, _ = run(capsys, "q", "dualizing", c3_file)
    lines = out.splitlines()
    assert lines[0] == "count 1"
    assert json.loads(lines[1]) == [0, 0, 1]


def test_q_star_and_binary_ops(capsys, tmp_path, c3_file):
    id_file = map_file(tmp_path, c3_file, "id", [0, 1, 2])
    o_file = map_file(tmp_path, c3_file, "o", [0, 0, 1])
    ctop_file = map_file(tmp_path, c3_file, "ctop", [0, 2, 2])
    code, out, _ = run(capsys, "q", "star", id_file)
    assert code == 0 and json.loads(out)["values"] == [0, 0, 1]
    code, out, _ = run(capsys, "q", "star", o_file)
    assert json.loads(out)["values"] == [0, 1, 2]
    code, out, _ = run(capsys, "q", "compose", ctop_file, o_file)
    assert json.loads(out)["values"] == [0, 0, 2]
    code, out, _ = run(capsys, "q", "residual-left", ctop_file, o_file)
    assert json.loads(out)["values"] == [0, 0, 0]
    code, out, _ = run(capsys, "q", "residual-right", o_file, ctop_file)
    assert json.loads(out)["values"] == [0, 0, 0]
    code, out, _ = run(capsys, "q", "oplus", o_file, o_file)
    assert json.loads(out)["values"] == [0, 0, 1]
    code, out, _ = run(capsys, "q", "oplus", id_file, id_file)
    assert json.loads(out)["values"] == [0, 2, 2]


# ---------------------------------------------------------------- verify

def test_verify_subset_of_checks(capsys):
    code, out, _ = run(capsys, "verify", "--checks", "T1,T11")
    assert code == 0
    assert "0 fail" in out
    assert "legend:" in out


def test_verify_json_on_directory_corpus(capsys, tmp_path, zoo):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    docio.save_lattice(zoo["c3"], str(corpus / "c3.json"))
    docio.save_lattice(zoo["m3"], str(corpus / "m3.json"))
    code, out, _ = run(capsys, "verify", "--corpus", str(corpus),
                       "--checks", "T8n,T13", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["corpus"] == ["c3", "m3"]
    assert doc["summary"]["fail"] == 0
    assert doc["results"]["T8n"]["c3"]["status"] == "skip"
    assert doc["results"]["T8n"]["m3"]["status"] == "pass"
    assert doc["results"]["T13"]["c3"]["status"] == "pass"


def test_verify_bad_corpus(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--corpus",
                       str(tmp_path / "nowhere"))
    assert code == 2 and "corpus directory" in err
    empty = tmp_path / "empty"
    empty.mkdir()
    code, _, err = run(capsys, "verify", "--corpus", str(empty))
    assert code == 2 and "no .json" in err


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--checks", "T1,bogus")
    assert code == 2 and "unknown check ids" in err


def test_verify_exit_one_on_failing_report(capsys, monkeypatch):
    report = SuiteReport(
        corpus=["x"], checks=["T1"],
        results={"T1": {"x": Cell("fail", witness={"y": 0})}},
        seed=0)
    monkeypatch.setattr(latq.suite, "run_suite",
                        lambda **kw: report)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL T1 on x" in out


def test_internal_error_exit_three(capsys, monkeypatch):
    def boom(**kw):
        raise RuntimeError("wires crossed")
    monkeypatch.setattr(latq.suite, "run_suite", boom)
    code, _, err = run(capsys, "verify")
    assert code == 3
    assert "RuntimeError" in err


# ------------------------------------------------------------------ misc

def test_help_and_no_args(capsys):
    code, _, _ = run(capsys, "--help")
    assert code == 0
    code, _, _ = run(capsys)
    assert code == 2  # subcommand required

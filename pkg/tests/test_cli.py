import json

from hopfcheck.cli import run
from hopfcheck.catalog import read_algebra


def test_example_then_verify_axioms(tmp_path):
    path = str(tmp_path / "h4.alg")
    code, text = run(["example", "sweedler", "-o", path])
    assert code == 0 and "wrote sweedler" in text
    code, text = run(["verify-axioms", path])
    assert code == 0
    assert "axiom associativity sweedler PASS" in text
    assert "galois-regularity sweedler PASS" in text


def test_modular_output(tmp_path):
    path = str(tmp_path / "t3.alg")
    assert run(["example", "taft", "--n", "3", "-o", path])[0] == 0
    code, text = run(["modular", path])
    assert code == 0
    assert "tau = -z - 1" in text
    assert "sigma order = 3" in text
    assert "antipode order = 6" in text
    assert "." not in text.split("tau = ")[1].splitlines()[0]  # exact scalars only


def test_radford_command(tmp_path):
    path = str(tmp_path / "h4.alg")
    run(["example", "sweedler", "-o", path])
    code, text = run(["radford", path])
    assert code == 0
    assert "s4-sandwich sweedler PASS" in text
    assert "s4-dual-transported dual(sweedler) PASS" in text
    assert "bidual-structure-iso sweedler PASS" in text


def test_radford_rejects_corrupted_antipode(tmp_path):
    path = tmp_path / "h4.alg"
    run(["example", "sweedler", "-o", str(path)])
    doc = json.loads(path.read_text())
    doc["antipode"] = []
    doc["name"] = "corrupted"
    bad = tmp_path / "corrupted.alg"
    bad.write_text(json.dumps(doc))
    code, text = run(["radford", str(bad)])
    assert code == 1
    assert "antipode-left corrupted FAIL" in text


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "broken.alg"
    bad.write_text("{not json")
    code, text = run(["radford", str(bad)])
    assert code == 2 and "error:" in text
    code, text = run(["modular", str(tmp_path / "missing.alg")])
    assert code == 2


def test_dual_command_round_trips(tmp_path):
    src = str(tmp_path / "t2.alg")
    mid = str(tmp_path / "t2-dual.alg")
    back = str(tmp_path / "t2-bidual.alg")
    run(["example", "taft", "--n", "2", "-o", src])
    assert run(["dual", src, "-o", mid])[0] == 0
    assert run(["dual", mid, "-o", back])[0] == 0
    original = read_algebra(src)
    bidual = read_algebra(back)
    assert bidual.mul == original.mul and bidual.comul == original.comul
    assert bidual.antipode == original.antipode


def test_check_command_with_default_and_trap_corpus(tmp_path):
    path = str(tmp_path / "t3.alg")
    run(["example", "taft", "--n", "3", "-o", path])
    code, text = run(["check", path])
    assert code == 0
    assert "radford taft-3 PASS" in text
    from importlib import resources
    traps = resources.files("hopfcheck").joinpath("corpus/convention_traps.ids")
    code, text = run(["check", path, "--corpus", str(traps)])
    assert code == 1
    assert "radford_swapped taft-3 FAIL" in text


def test_check_command_with_corpus_directory(tmp_path):
    path = str(tmp_path / "h4.alg")
    run(["example", "sweedler", "-o", path])
    corpus_dir = tmp_path / "ids"
    corpus_dir.mkdir()
    (corpus_dir / "one.ids").write_text("idy: forall a in A . eps(a(1)) * a(2) = a\n")
    code, text = run(["check", path, "--corpus", str(corpus_dir)])
    assert code == 0 and "idy sweedler PASS" in text


def test_full_report_deterministic(tmp_path):
    path = str(tmp_path / "h4.alg")
    run(["example", "sweedler", "-o", path])
    code1, text1 = run(["full-report", path])
    code2, text2 = run(["full-report", path])
    assert code1 == code2 == 0
    assert text1 == text2
    assert "== summary sweedler PASS ==" in text1


def test_example_group_algebras(tmp_path):
    path = str(tmp_path / "z6.alg")
    code, _ = run(["example", "group-algebra", "--cyclic", "6", "-o", path])
    assert code == 0
    assert read_algebra(path).dim == 6
    code, _ = run(["example", "function-algebra", "--symmetric", "3", "-o", path])
    assert code == 0
    assert read_algebra(path).dim == 6
    table = tmp_path / "z2.group"
    table.write_text(json.dumps({"order": 2, "identity": 0, "table": [[0, 1], [1, 0]]}))
    code, _ = run(["example", "group-algebra", "--table", str(table), "-o", path])
    assert code == 0
    assert read_algebra(path).dim == 2


def test_example_usage_errors(tmp_path):
    assert run(["example", "taft", "-o", str(tmp_path / "x.alg")])[0] == 2
    assert run(["example", "group-algebra", "-o", str(tmp_path / "x.alg")])[0] == 2
    assert run(["example", "group-algebra", "--cyclic", "2", "--symmetric", "3",
                "-o", str(tmp_path / "x.alg")])[0] == 2


def test_example_writes_to_stdout():
    code, text = run(["example", "sweedler"])
    assert code == 0
    doc = json.loads(text)
    assert doc["name"] == "sweedler" and doc["dim"] == 4

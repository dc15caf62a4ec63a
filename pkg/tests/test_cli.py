import json

from forge.cli import main


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "tables" in out and "e8-dempwolff" in out


def test_build_round_trip(tmp_path, capsys):
    path = tmp_path / "okubo.alg"
    assert main(["build", "okubo:2,3", "--out", str(path)]) == 0
    text = path.read_text()
    assert text.startswith("dim 8 over Q(w)")
    from forge.algebra import algebra_from_text
    back = algebra_from_text(text)
    assert back.to_text() == text
    # nonzero products of the Okubo table: one per basis pair row entry
    assert sum(1 for ln in text.splitlines() if "->" in ln) == 32


def test_build_unknown_is_usage_error(capsys):
    assert main(["build", "nonsense"]) == 2


def test_grade_check_type_universal(capsys):
    rc = main(["grade", "--family", "okubo", "--kind", "z3^2",
               "--check", "--type", "--universal", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verified"] is True
    assert payload["type"] == [8]
    assert payload["universal"] == "Z3 x Z3"


def test_grade_emit_and_check_files(tmp_path, capsys):
    apath = tmp_path / "okubo.alg"
    gpath = tmp_path / "okubo.grad"
    assert main(["build", "okubo:1,1", "--out", str(apath)]) == 0
    assert main(["grade", "--family", "okubo", "--kind", "z3^2",
                 "--out", str(gpath)]) == 0
    capsys.readouterr()
    rc = main(["grade", "--algebra", str(apath), "--grading", str(gpath),
               "--check", "--type", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verified"] is True and payload["type"] == [8]


def test_verify_command(capsys):
    assert main(["verify", "composition", "--name", "split-cayley"]) == 0
    assert main(["verify", "symmetric", "--name", "split-cayley"]) == 1
    assert main(["verify", "symmetric", "--name", "okubo:1,1"]) == 0


def test_scenario_exit_codes(capsys):
    assert main(["scenario", "tables"]) == 0
    assert main(["scenario", "no-such-scenario"]) == 2
    # the toral-operator bundle carries the documented red claim
    assert main(["scenario", "toral-operator"]) == 1


def test_scenario_json(capsys):
    assert main(["scenario", "round-trip", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert all(c["passed"] for c in payload["details"]["claims"])


def test_magic_small(capsys):
    rc = main(["magic", "--left", "s1", "--right", "s2:1", "--check", "jacobi",
               "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    dims = [r for r in payload if r["name"] == "dimension"]
    assert dims[0]["details"]["dim"] == 8


def test_build_nested_albert(capsys):
    assert main(["verify", "jordan", "--name", "albert:okubo:1,1"]) == 0
    assert main(["verify", "lie", "--name", "albert:okubo:1,1"]) == 1


def test_grade_dim2_family(capsys):
    rc = main(["grade", "--family", "dim2", "--check", "--type",
               "--universal", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["type"] == [2] and payload["universal"] == "Z3"


def test_every_builder_emits_and_reingests(tmp_path):
    from forge.cli import _BUILDERS, build_algebra
    from forge.algebra import algebra_from_text
    for name in sorted(_BUILDERS):
        A = build_algebra(name)
        text = A.to_text()
        assert algebra_from_text(text).to_text() == text, name


def test_help_exits_zero():
    assert main(["--help"]) == 0

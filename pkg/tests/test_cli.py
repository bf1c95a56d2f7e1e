import json

import pytest

from hilbschur.cli import main
from hilbschur.kclasses import gen_one, kclass_to_json
from hilbschur.partitions import canonical_section


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims(capsys):
    code, out, _ = run_cli(capsys, "dims", "-n", "3",
                           "--target", "3", "--source", "3")
    assert code == 0
    assert out == "3\n"


def test_dims_set_partition_args(capsys):
    code, out, _ = run_cli(capsys, "dims", "-n", "3",
                           "--target", "1 2|3", "--source", "1|2|3")
    assert code == 0
    assert out == "3\n"


def test_basis(capsys):
    code, out, _ = run_cli(capsys, "basis", "-n", "3",
                           "--target", "3", "--source", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].endswith("rank 3")
    assert len(lines) == 4


def test_multiply_inline_and_file(capsys, tmp_path):
    e111 = canonical_section((1, 1, 1))
    e21 = canonical_section((2, 1))
    q = json.dumps(kclass_to_json(gen_one(e111, e21)))
    p_path = tmp_path / "p.json"
    p_path.write_text(json.dumps(kclass_to_json(gen_one(e21, e111))))
    code, out, _ = run_cli(capsys, "multiply", "--left", q,
                           "--right", str(p_path))
    assert code == 0
    product = json.loads(out)
    assert [s["rep"] for s in product["stalks"]] == ["1,2,3", "2,1,3"]


def test_multiply_usage_error(capsys):
    code, _, err = run_cli(capsys, "multiply", "--left", "/nonexistent.json",
                           "--right", "{}")
    assert code == 2
    assert "cannot read operand" in err


def test_check_relations(capsys):
    code, out, _ = run_cli(capsys, "check", "relations", "-n", "3")
    assert code == 0
    assert "all relations hold" in out


def test_check_stalks(capsys):
    code, out, _ = run_cli(capsys, "check", "stalks", "-n", "8")
    assert code == 0
    assert "stalk operators consistent" in out


def test_check_oracle_small(capsys):
    code, out, _ = run_cli(capsys, "check", "oracle", "-n", "2")
    assert code == 0
    assert "oracle agrees" in out


def test_check_schur_small(capsys):
    code, out, _ = run_cli(capsys, "check", "schur", "-n", "2")
    assert code == 0
    assert "multiplicative" in out


def test_check_is_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "check", "assoc", "-n", "3",
                             "--samples", "20", "--seed", "7")
    code2, out2, _ = run_cli(capsys, "check", "assoc", "-n", "3",
                             "--samples", "20", "--seed", "7")
    assert (code1, out1) == (code2, out2)
    assert code1 == 0


def test_quiver(capsys):
    code, out, _ = run_cli(capsys, "quiver", "-n", "3")
    assert code == 0
    assert "q p = e(1^3) + s" in out
    assert "[ok]" in out and "FAILED" not in out
    code, _, err = run_cli(capsys, "quiver", "-n", "4")
    assert code == 2


def test_phi(capsys):
    code, out, _ = run_cli(capsys, "phi", "--lambda", "2,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["shape"] == "2,1"
    assert doc["phi"]["rows"] == ["3", "2,1", "1,1,1"]


def test_export_byte_stable(capsys, tmp_path):
    path1 = tmp_path / "a.json"
    path2 = tmp_path / "b.json"
    assert run_cli(capsys, "export", "--json", str(path1), "-n", "2")[0] == 0
    assert run_cli(capsys, "export", "--json", str(path2), "-n", "2")[0] == 0
    assert path1.read_bytes() == path2.read_bytes()
    doc = json.loads(path1.read_text())
    assert set(doc) == {"n", "reduced", "mod_p", "idempotents", "basis",
                        "products"}
    # re-exported data round-trips to an equal table
    assert doc == json.loads(path1.read_text())


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["dims", "-n", "three", "--target", "3", "--source", "3"])
    assert err.value.code == 2

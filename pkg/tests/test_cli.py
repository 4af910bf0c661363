import json
import re
import subprocess
import sys

import pytest

from cellatlas.cli import main, render_json

EX_A = ["classical", "--type", "B", "--rank", "7", "--partition", "7,3,3,1,1"]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_table_b7_orbit(capsys):
    code, out, _ = run(EX_A, capsys)
    assert code == 0
    assert out.rstrip().splitlines()[-1] == "total |Y'| = 427"
    assert "special symbol: (0,2,5|1,3)" in out
    assert "Ā-fixed points = 91" in out


def test_json_b7_orbit(capsys):
    code, out, _ = run(EX_A + ["--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["y_total"] == 427 and data["y_fixed"] == 91
    assert data["special_symbol"] == "(0,2,5|1,3)"
    assert sorted(c["count"] for c in data["cell_types"]) == [14, 21, 35, 49, 91]
    assert render_json(data) == out  # byte-identical round trip


def test_table_and_json_agree(capsys):
    _, table, _ = run(["classical", "--type", "C", "--rank", "7", "--partition", "6,4,2,2"], capsys)
    _, js, _ = run(["classical", "--type", "C", "--rank", "7", "--partition", "6,4,2,2", "--format", "json"],
                   capsys)
    data = json.loads(js)
    assert f"total |Y'| = {data['y_total']}" in table
    for c in data["cell_types"]:
        assert re.search(rf"{re.escape(c['pattern'])}\s+⟨{re.escape(', '.join(c['h_basis']))}⟩\s+{c['count']}\s",
                         table)
    for s in data["family"]["symbols"]:
        assert re.search(rf"{re.escape(s['symbol'])}\s+{s['dim']}\s", table)


def test_deterministic(capsys):
    outs = {run(EX_A + ["--format", "json"], capsys)[1] for _ in range(3)}
    assert len(outs) == 1


@pytest.mark.parametrize("argv,code", [
    (["classical", "--type", "B", "--rank", "2", "--partition", "x"], 2),
    (["classical", "--type", "C", "--rank", "2", "--partition", "3,1"], 2),
    (["classical", "--type", "B", "--rank", "3", "--partition", "7,3,3,1,1"], 2),
    (["classical", "--type", "C", "--rank", "2", "--partition", "2,1,1"], 3),
    (["classical", "--type", "B", "--rank", "2", "--partition", "2,2,1"], 3),
    (["classical", "--type", "D", "--rank", "2", "--partition", "2,2"], 4),
    (["exceptional", "--type", "E6", "--orbit", "E6(a9)"], 4),
    (["family", "--z1", "0,1", "--type", "B"], 2),
    (["family", "--z1", "a", "--type", "B"], 2),
])
def test_exit_codes(argv, code, capsys):
    got, out, err = run(argv, capsys)
    assert got == code and out == "" and err.startswith("cell-atlas: ")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classical", "--type", "A", "--rank", "1", "--partition", "2"])
    assert exc.value.code == 2


def test_family_single_symbol(capsys):
    code, out, _ = run(["family", "--z1", "0", "--type", "B", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["y_total"] == 1 and len(data["cell_types"]) == 1


def test_family_command_matches_classical(capsys):
    _, a, _ = run(EX_A + ["--format", "json"], capsys)
    _, f, _ = run(["family", "--z1", "0,1,2,3,5", "--type", "B", "--format", "json"], capsys)
    da, df = json.loads(a), json.loads(f)
    del da["input"], df["input"]
    assert da == df


def test_gram(capsys):
    code, out, _ = run(["gram", "--z1", "0,1,2,3,5", "--type", "B", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["determinant"] != 0
    assert len(data["matrix"]) == len(data["patterns"]) == 5
    assert all(data["matrix"][i][i] == 4 for i in range(5))
    _, table, _ = run(["gram", "--z1", "0,1,2,3,5", "--type", "B"], capsys)
    assert f"determinant = {data['determinant']}" in table


def test_exceptional_commands(capsys):
    code, out, _ = run(["exceptional", "--type", "E8", "--orbit", "E8(a7)", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["abar"] == "S5"
    code, out, _ = run(["exceptional", "--type", "G2", "--orbit", "G2(a1)"], capsys)
    assert "Y' = S3/S2 ⊔ S3/S3" in out
    code, out, _ = run(["list", "--type", "E8", "--abar", "S3", "--format", "json"], capsys)
    assert [r["orbit"] for r in json.loads(out)] == ["D4(a1)", "E8(b5)", "D4(a1)+A1", "E8(a6)"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cellatlas"] + EX_A, capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.rstrip().endswith("total |Y'| = 427")

import io
import json

import pytest

from rmacode.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


TOY = ["--m", "2", "--r", "1", "--M", "2", "--l", "1"]
T2 = ["--m", "4", "--r", "1", "--M", "4", "--l", "3"]


def test_analyze_table2_column():
    code, text = run("analyze", *T2)
    assert code == 0
    rows = text.splitlines()[1:4]
    assert len(rows) == 3
    for row in rows:
        assert "0.1250" in row and "0.4000" in row


def test_analyze_definition_toy():
    code, text = run("analyze", *TOY, "--method", "definition")
    assert code == 0
    row = text.splitlines()[1].split()
    assert row[4:8] == ["1/2", "0.5000", "1/2", "0.5000"]
    assert row[-1] == "bruteforce_definition"


def test_sweep_rows_and_footnote():
    code, text = run("analyze", "--sweep", "m=4..8", "--r", "1", "--M", "4", "--l", "3")
    assert code == 0
    lines = text.splitlines()
    rows = [ln for ln in lines[1:] if not ln.startswith("*")]
    assert len(rows) == 5
    assert [r.split()[7] for r in rows] == ["0.4000", "0.3871", "0.3810", "0.3780", "0.3765"]
    notes = [ln for ln in lines if ln.startswith("*")]
    assert len(notes) == 1 and "m=5" in notes[0] and "0.3817" in notes[0]


def test_json_and_text_agree():
    _, text = run("analyze", *T2, "--output", "json")
    data = json.loads(text)
    _, table = run("analyze", *T2)
    for rep, row in zip(data["reports"], table.splitlines()[1:]):
        cells = row.split()
        assert [rep["P_I"], rep["P_I_dec4"], rep["P_S"], rep["P_S_dec4"]] == cells[4:8]


def test_csv_output():
    code, text = run("analyze", *T2, "--method", "closed", "--output", "csv")
    assert code == 0
    header, row = text.splitlines()
    assert header.startswith("m,r,M,l,P_I(exact)")
    assert row == "4,1,4,3,1/8,0.1250,2/5,0.4000,8,1,closed_form"


def test_keygen_deterministic(tmp_path):
    a, b = tmp_path / "a.key", tmp_path / "b.key"
    assert run("keygen", *T2, "--seed", "42", "--out", str(a))[0] == 0
    assert run("keygen", *T2, "--seed", "42", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    run("keygen", *T2, "--seed", "43", "--out", str(b))
    assert a.read_bytes() != b.read_bytes()


@pytest.fixture
def toy_key(tmp_path):
    path = tmp_path / "toy.key"
    run("keygen", *TOY, "--seed", "3", "--out", str(path))
    return str(path)


def test_tag_verify_roundtrip(toy_key):
    for source in ("0", "1", "2", "3"):
        code, msg = run("tag", "--key", toy_key, "--source", source)
        assert code == 0
        assert run("verify", "--key", toy_key, "--message", msg.strip())[0] == 0


def test_flipped_tag_rejected(toy_key):
    _, msg = run("tag", "--key", toy_key, "--source", "1")
    flipped = bytes([int(msg, 16) ^ 0x20]).hex()
    code, text = run("verify", "--key", toy_key, "--message", flipped)
    assert code == 1 and text.strip() == "reject"


def test_malformed_inputs(toy_key, tmp_path):
    assert run("verify", "--key", toy_key, "--message", "zz")[0] == 2
    assert run("verify", "--key", toy_key, "--message", "6000")[0] == 2
    assert run("tag", "--key", toy_key, "--source", "7")[0] == 2
    assert run("tag", "--key", toy_key, "--source", "1", "--m", "3")[0] == 2
    bad = tmp_path / "bad.key"
    bad.write_text("garbage\n")
    assert run("verify", "--key", str(bad), "--message", "60")[0] == 2
    assert run("verify", "--key", str(tmp_path / "missing"), "--message", "60")[0] == 2


def test_usage_errors():
    assert run("analyze", "--m", "2")[0] == 2
    assert run("analyze", "--m", "2", "--r", "3", "--M", "2", "--l", "1")[0] == 2
    assert run("bogus")[0] == 2
    assert run("simulate", "--attack", "substitution", *TOY, "--delta-s", "0", "--delta-t", "0")[0] == 2
    assert run("simulate", "--attack", "substitution", *TOY, "--delta-s", "1")[0] == 2


def test_guardrail_exit(monkeypatch):
    monkeypatch.setenv("RMACODE_GUARDRAIL_KEYS", "10")
    code, _ = run("analyze", *T2, "--method", "definition")
    assert code == 3


def parse_record(text):
    return dict(kv.split("=", 1) for kv in text.split())


def test_simulate_impersonation():
    code, text = run("simulate", "--attack", "impersonation", *T2, "--trials", "100000", "--seed", "7")
    assert code == 0
    rec = parse_record(text)
    assert rec["attack"] == "imp"
    assert abs(float(rec["rate"]) - 0.125) <= 0.004


def test_simulate_substitution_default_strategy(tmp_path):
    trace = tmp_path / "trace.csv"
    code, text = run("simulate", "--attack", "substitution", *TOY, "--trials", "100000", "--trace", str(trace))
    assert code == 0
    rec = parse_record(text)
    assert abs(float(rec["rate"]) - 0.5) <= 0.005
    assert len(trace.read_text().splitlines()) == 100001


def test_simulate_explicit_strategy_json():
    code, text = run(
        "simulate", "--attack", "substitution", *T2, "--delta-s", "1", "--delta-t", "4",
        "--trials", "20000", "--output", "json",
    )
    assert code == 0
    rec = json.loads(text)
    assert rec["reference"] == "0.400000"


def test_simulate_deterministic():
    args = ("simulate", "--attack", "substitution", *T2, "--trials", "30000", "--seed", "5")
    assert run(*args) == run(*args)


def test_authmatrix_toy():
    code, text = run("authmatrix", *TOY)
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 9
    rows = [ln.split(",") for ln in lines[1:]]
    assert [r[2] for r in rows if r[1] == "0"] == ["0", "0", "0", "0"]
    for zero, one in zip(rows[::2], rows[1::2]):
        assert zero[0] == one[0]
        for a, b in zip(zero[2:], one[2:]):
            assert {a, b} == {"0", "1"}


def test_authmatrix_json():
    code, text = run("authmatrix", *TOY, "--output", "json")
    data = json.loads(text)
    assert data["sources"] == ["00", "10", "01", "11"]
    assert data["rows"][0] == {"k1": [0], "k2": 0, "tags": [0, 1, 1, 0]}


def test_help_lists_subcommands(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    for cmd in ("analyze", "keygen", "tag", "verify", "simulate", "authmatrix"):
        assert cmd in out

import json

import pytest

from msdmv.cli import main


def run(args):
    return main(args)


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def make_keys(workdir, scheme="s2", n=3, m=2, set_name="paper-ex1"):
    assert run(["params", "gen", "--scheme", scheme, "--set", set_name,
                "--out", "params.json"]) == 0
    assert run(["keygen", "--scheme", scheme, "--params", "params.json",
                "--side", "A", "--count", str(n), "--seed", "1", "--out", "ka.json"]) == 0
    assert run(["keygen", "--scheme", scheme, "--params", "params.json",
                "--side", "B", "--count", str(m), "--seed", "2", "--out", "kb.json"]) == 0


@pytest.mark.parametrize("scheme", ["s1", "s2", "s3", "combined"])
def test_sign_then_verify_round_trip(workdir, scheme, capsys):
    make_keys(workdir, scheme)
    assert run(["sign", "--scheme", scheme, "--params", "params.json",
                "--keys-a", "ka.json", "--keys-b", "kb.json",
                "--message", "pay 5", "--seed", "7", "--out", "sig.json"]) == 0
    assert run(["verify", "--scheme", scheme, "--params", "params.json",
                "--keys-a", "ka.json", "--keys-b", "kb.json",
                "--message", "pay 5", "--sig", "sig.json"]) == 0
    out = capsys.readouterr().out
    assert "accepted" in out


def test_verify_rejects_wrong_message(workdir, capsys):
    make_keys(workdir)
    run(["sign", "--scheme", "s2", "--params", "params.json", "--keys-a", "ka.json",
         "--keys-b", "kb.json", "--message", "pay 5", "--seed", "7", "--out", "sig.json"])
    code = run(["verify", "--scheme", "s2", "--params", "params.json",
                "--keys-a", "ka.json", "--keys-b", "kb.json",
                "--message", "pay 6", "--sig", "sig.json"])
    assert code == 1
    assert "rejected" in capsys.readouterr().out


def test_verify_rejects_tampered_signature_file(workdir, capsys):
    make_keys(workdir)
    run(["sign", "--scheme", "s2", "--params", "params.json", "--keys-a", "ka.json",
         "--keys-b", "kb.json", "--message", "pay 5", "--seed", "7", "--out", "sig.json"])
    record = json.loads((workdir / "sig.json").read_text())
    record["u_bar"] = str((int(record["u_bar"]) + 1) % 15)
    (workdir / "sig.json").write_text(json.dumps(record))
    code = run(["verify", "--scheme", "s2", "--params", "params.json",
                "--keys-a", "ka.json", "--keys-b", "kb.json",
                "--message", "pay 5", "--sig", "sig.json"])
    assert code == 1
    assert "rejected" in capsys.readouterr().out


def test_sign_is_deterministic_in_seed(workdir):
    make_keys(workdir)
    for name in ("one.json", "two.json"):
        run(["sign", "--scheme", "s2", "--params", "params.json", "--keys-a", "ka.json",
             "--keys-b", "kb.json", "--message", "pay 5", "--seed", "9", "--out", name])
    assert (workdir / "one.json").read_bytes() == (workdir / "two.json").read_bytes()
    run(["sign", "--scheme", "s2", "--params", "params.json", "--keys-a", "ka.json",
         "--keys-b", "kb.json", "--message", "pay 5", "--seed", "10", "--out", "three.json"])
    assert (workdir / "one.json").read_bytes() != (workdir / "three.json").read_bytes()


def test_sign_writes_event_log(workdir):
    make_keys(workdir)
    run(["sign", "--scheme", "s2", "--params", "params.json", "--keys-a", "ka.json",
         "--keys-b", "kb.json", "--message", "pay 5", "--seed", "7",
         "--out", "sig.json", "--events", "events.jsonl"])
    lines = [json.loads(l) for l in (workdir / "events.jsonl").read_text().splitlines()]
    assert lines[0]["event"] == "created"
    assert lines[-1]["event"] == "phase"
    assert lines[-1]["phase"] == "accepted"


def test_simulate_paper_mode_reports_mirror_failure(workdir, capsys):
    make_keys(workdir, m=2)
    assert run(["simulate", "--scheme", "s2", "--params", "params.json",
                "--keys-a", "ka.json", "--keys-b", "kb.json", "--message", "x",
                "--mode", "paper", "--kprime", "5", "--out", "sim.json"]) == 0
    out = capsys.readouterr().out
    assert "mirrored verification: rejected" in out
    assert run(["simulate", "--scheme", "s2", "--params", "params.json",
                "--keys-a", "ka.json", "--keys-b", "kb.json", "--message", "x",
                "--mode", "corrected", "--kprime", "5", "--out", "sim2.json"]) == 0
    assert "mirrored verification: accepted" in capsys.readouterr().out
    record = json.loads((workdir / "sim.json").read_text())
    assert record["mode"] == "paper" and record["scheme"] == "s2"


def test_vectors_command_all_pass(workdir, capsys):
    assert run(["vectors"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "vector checks passed" in out


def test_vectors_filtered(workdir, capsys):
    assert run(["vectors", "--scheme", "s2", "--set", "paper-ex1"]) == 0
    out = capsys.readouterr().out
    assert "s2/paper-ex1 aggregate(printed rows).s: 144" in out
    assert "s3/" not in out
    assert "note:" in out  # the erratum cells carry their annotations


def test_vectors_json_output(workdir, capsys):
    assert run(["vectors", "--scheme", "s1", "--set", "paper-ex1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert all(entry["ok"] for entry in data)


def test_ledger_demo(workdir, capsys):
    assert run(["ledger", "demo", "--seed", "0", "--out", "chain.jsonl"]) == 0
    out = capsys.readouterr().out
    assert "chain verification: ok" in out
    lines = (workdir / "chain.jsonl").read_text().strip().splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert first["signers"] == ["P1", "P2", "P3", "P5", "P7", "P9", "P11"]


def test_usage_error_exits_2(workdir):
    with pytest.raises(SystemExit) as exc:
        run(["sign", "--scheme", "bogus"])
    assert exc.value.code == 2


def test_missing_file_exits_3(workdir, capsys):
    code = run(["keygen", "--scheme", "s2", "--params", "missing.json",
                "--side", "A", "--count", "1"])
    assert code == 3
    assert "error:" in capsys.readouterr().err


def test_params_gen_custom(workdir, capsys):
    assert run(["params", "gen", "--scheme", "s2", "--p", "211",
                "--na", "3,5", "--nb", "2,7", "--seed", "3", "--out", "p.json"]) == 0
    record = json.loads((workdir / "p.json").read_text())
    assert record["p"] == "211"
    assert run(["params", "gen", "--scheme", "s1", "--p", "11", "--json"]) == 0
    data = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert data["q"] == "23"

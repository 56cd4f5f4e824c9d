import io
import json
import subprocess
import sys

import pytest

from gwsym.cli import main, run_batch
from gwsym.fields import QQ
from gwsym.gw import parse


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_grassmann_chi(capsys):
    code, out, _ = run(capsys, "grassmann", "chi", "--d", "2", "--r", "4")
    assert code == 0 and out.strip() == "4⟨1⟩ + 2⟨-1⟩"


def test_talpha_one(capsys):
    code, out, _ = run(capsys, "power", "talpha", "--field", "Q", "--alpha", "1")
    assert code == 0 and out.strip() == "0"


def test_delpezzo_sym3_json(capsys):
    code, out, _ = run(capsys, "delpezzo", "sym3", "--alpha", "3", "--beta", "5", "--gamma", "7", "--json")
    assert code == 0
    data = json.loads(out)
    assert set(data["result"]) == {"computed", "printed", "equal"}
    assert data["result"]["computed"]["rank"] == 165
    assert data["result"]["printed"]["rank"] == 165
    assert isinstance(data["result"]["equal"], bool)


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["gw", "eq", "--x", "<1>+<1>", "--y", "<2>+<2>"], "true"),
        (["gw", "eq", "--x", "<1>", "--y", "<2>"], "false"),
        (["gw", "eq", "--x", "<1>", "--y", "<2>", "--field", "Fp:7"], "true"),
        (["gw", "add", "--x", "<2>", "--y", "<-2>"], "⟨2⟩ + ⟨-2⟩"),
        (["gw", "mul", "--x", "<2>", "--y", "<3>"], "⟨6⟩"),
        (["gw", "invariants", "--x", "<2>+<3>"], "rank 2, disc 6, signature 2, hasse inf:1 2:-1 3:-1"),
        (["power", "an", "--q", "H", "--n", "3"], None),
        (["power", "closed", "--m", "2", "--n", "2"], "6⟨1⟩ + 4⟨-1⟩"),
        (["power", "closed", "--m", "2", "--n", "3", "--i", "0"], "4⟨1⟩"),
        (["k0", "chi", "--x", "P^2"], "2⟨1⟩ + ⟨-1⟩"),
        (["k0", "sym", "--x", "Et(3)", "--n", "2"], "1 + Et(3)"),
        (["k0", "mul", "--x", "Et(3)", "--y", "Et(5)"], "Et(3,5)"),
        (["zeta", "kapranov", "--x", "P^1", "--order", "2"], "1 + (⟨1⟩ + ⟨-1⟩)t + (2⟨1⟩ + ⟨-1⟩)t^2 + O(t^3)"),
        (["zeta", "geom", "--q", "<1>", "--order", "2"], "1 + t + t^2 + O(t^3)"),
        (["grassmann", "losanitsch", "--d", "2", "--r", "4"], "e = 4, o = 2"),
        (["grassmann", "sym", "--d", "1", "--r", "2", "--n", "2"], None),
        (["grassmann", "zeta", "--d", "1", "--r", "2", "--order", "2"], None),
        (["delpezzo", "chi", "--alpha", "3", "--beta", "5", "--gamma", "7"], None),
    ],
)
def test_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    if expected is not None:
        assert out.strip() == expected


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "power", "an", "--q", "<3>+<5>", "--n", "3")
    _, js, _ = run(capsys, "power", "an", "--q", "<3>+<5>", "--n", "3", "--json")
    data = json.loads(js)
    assert data["text"] == text.strip()
    assert parse(text.strip(), QQ) == parse(data["result"]["text"], QQ)


def test_json_is_stable(capsys):
    argv = ["k0", "sym", "--x", "Et(3,5) + A", "--n", "3", "--json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize(
    "argv,code",
    [
        (["gw", "eq", "--x", "<1", "--y", "<1>"], 2),
        (["gw", "frobnicate", "--x", "<1>"], 2),
        (["grassmann", "chi", "--d", "x", "--r", "4"], 2),
        (["gw", "eq", "--x", "<1>", "--y", "<1>", "--field", "Fp:9"], 1),
        (["gw", "eq", "--x", "<1>", "--y", "<1>", "--field", "Z"], 2),
        (["power", "talpha", "--alpha", "0"], 1),
        (["grassmann", "chi", "--d", "5", "--r", "4"], 1),
        (["delpezzo", "chi", "--alpha", "4", "--beta", "5", "--gamma", "7"], 1),
        (["power", "an", "--q", "H", "--n", "99"], 1),
    ],
)
def test_error_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err.strip()


def test_error_names_the_case(capsys):
    _, _, err = run(capsys, "power", "talpha", "--alpha", "0")
    assert "ZeroInput" in err


def test_batch():
    lines = [
        json.dumps({"cmd": "grassmann chi", "args": {"d": 2, "r": 4}}),
        json.dumps({"cmd": "gw eq", "args": {"x": "<3>+<-3>", "y": "H", "field": "Fp:7"}}),
        "",
        "not json",
        json.dumps({"cmd": "power talpha", "args": {"alpha": 0}}),
    ]
    code, out = run_batch(lines)
    assert code == 2
    assert [o["status"] for o in out] == ["ok", "ok", "error", "error"]
    assert out[0]["result"]["text"] == "4⟨1⟩ + 2⟨-1⟩"
    assert out[1]["result"] == {"equal": True}
    assert "ZeroInput" in out[3]["diagnostics"][0]


def test_batch_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"cmd": "k0 chi", "args": {"x": "A^3"}}\n'))
    code, out, _ = run(capsys, "batch")
    assert code == 0
    assert json.loads(out)["text"] == "⟨-1⟩"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gwsym", "grassmann", "chi", "--d", "1", "--r", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "⟨1⟩ + ⟨-1⟩"

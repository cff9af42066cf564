import json
import subprocess
import sys

import pytest

from critex.autfile import save_automaton
from critex.cli import main
from critex.sequences import (
    constant_zero,
    one_then_zeros,
    pairs_ones_then_01,
    pairs_single,
    pairs_unbounded,
    thue_morse,
)


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("aut")
    paths = {}
    for name, m in [
        ("tm.dfao", thue_morse()),
        ("zero.dfao", constant_zero()),
        ("one_then_zeros.dfao", one_then_zeros()),
        ("pairs.dfa", pairs_ones_then_01()),
        ("unbounded.dfa", pairs_unbounded()),
        ("finite.dfa", pairs_single()),
    ]:
        p = d / name
        save_automaton(str(p), m)
        paths[name] = str(p)
    return paths


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exponent_critical_text(files, capsys):
    code, out, _ = run_cli(capsys, "exponent", files["tm.dfao"], "--which", "critical")
    assert code == 0
    assert "value=2/1" in out
    assert "attained=true" in out


def test_exponent_infinite(files, capsys):
    code, out, _ = run_cli(capsys, "exponent", files["zero.dfao"], "--which", "critical")
    assert code == 0
    assert "value=inf" in out


def test_json_and_text_agree(files, capsys):
    code, text_out, _ = run_cli(capsys, "exponent", files["tm.dfao"], "--which", "critical")
    assert code == 0
    code, json_out, _ = run_cli(capsys, "exponent", files["tm.dfao"], "--which", "critical", "--json")
    assert code == 0
    payload = json.loads(json_out)
    assert payload["values"]["value"] == "2/1"
    assert payload["attained"] is True
    assert "value=2/1" in text_out and "attained=true" in text_out
    assert payload["input_digest"]
    assert isinstance(payload["time_ms"], int)


def test_golden_json_shape(files, capsys):
    code, out, _ = run_cli(capsys, "sup", files["pairs.dfa"], "--json")
    assert code == 0
    payload = json.loads(out)
    payload["time_ms"] = 0  # wall time is the only run-dependent field
    assert payload == {
        "attained": True,
        "command": f"critex sup {files['pairs.dfa']} --json",
        "input_digest": payload["input_digest"],
        "sizes": {"input_states": 3},
        "time_ms": 0,
        "values": {"value": "1/1"},
        "witness": "word [1,1] pair=(1,1)",
    }


def test_sup_and_special(files, capsys):
    code, out, _ = run_cli(capsys, "sup", files["pairs.dfa"])
    assert code == 0 and "value=1/1" in out and "attained=true" in out
    code, out, _ = run_cli(capsys, "special", files["pairs.dfa"])
    assert code == 0 and "value=1/2" in out
    code, out, _ = run_cli(capsys, "sup", files["unbounded.dfa"])
    assert code == 0 and "value=inf" in out


def test_special_finite_is_precondition_error(files, capsys):
    code, _, err = run_cli(capsys, "special", files["finite.dfa"])
    assert code == 3
    assert "finite" in err


def test_recurrence_reports(files, capsys):
    code, out, _ = run_cli(capsys, "recurrence", files["zero.dfao"])
    assert code == 0
    assert "linearly-recurrent=true" in out and "value=1/1" in out
    code, out, _ = run_cli(capsys, "recurrence", files["one_then_zeros.dfao"])
    assert code == 0
    assert "linearly-recurrent=false" in out and "reason=not-recurrent" in out


def test_eval_sentence_and_dump(files, capsys, tmp_path):
    code, out, _ = run_cli(capsys, "eval", files["tm.dfao"], "--formula", "E i . seq[i] = 1")
    assert code == 0 and "sentence=true" in out
    code, out, _ = run_cli(capsys, "eval", files["tm.dfao"], "--formula", "A i . seq[i] = 0")
    assert code == 0 and "sentence=false" in out
    dump = tmp_path / "period.dfa"
    code, out, _ = run_cli(
        capsys,
        "eval",
        files["tm.dfao"],
        "--formula",
        "p >= 1 & (E i . A j . j + p < q -> seq[i+j] = seq[i+p+j])",
        "--vars",
        "q,p",
        "--dump",
        str(dump),
    )
    assert code == 0 and dump.exists()
    from critex.autfile import load_automaton
    from critex.exponents import period_language
    from critex.automaton import language_equal

    dumped = load_automaton(str(dump))
    assert language_equal(dumped, period_language(thue_morse()))


def test_eval_open_formula_needs_vars(files, capsys):
    code, _, err = run_cli(capsys, "eval", files["tm.dfao"], "--formula", "seq[x] = 1")
    assert code == 2 and "--vars" in err


def test_formula_syntax_error_is_input_error(files, capsys):
    code, _, err = run_cli(capsys, "eval", files["tm.dfao"], "--formula", "E i .")
    assert code == 2 and "position" in err


def test_oracle_commands(files, capsys):
    code, out, _ = run_cli(capsys, "oracle", "prefix", files["tm.dfao"], "--n", "16")
    assert code == 0 and "prefix=0110100110010110" in out
    code, out, _ = run_cli(capsys, "oracle", "scan", files["tm.dfao"], "--n", "16384", "--max-period", "64")
    assert code == 0 and "value=2/1" in out
    code, out, _ = run_cli(capsys, "oracle", "recurrence", files["zero.dfao"], "--n", "1024")
    assert code == 0 and "value=1/1" in out
    code, out, _ = run_cli(capsys, "oracle", "quo", files["pairs.dfa"], "--n", "4")
    assert code == 0 and "count=4" in out and "max=1/1" in out


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(capsys, "exponent", "/nonexistent/x.dfao")
    assert code == 2


def test_bad_automaton_file_is_input_error(tmp_path, capsys):
    p = tmp_path / "bad.dfao"
    p.write_text("not an automaton\n")
    code, _, err = run_cli(capsys, "exponent", str(p))
    assert code == 2


def test_non_zero_invariant_dfao_rejected(tmp_path, capsys):
    # output flips when a leading zero is read: depends on padding
    text = """critex-automaton v1
base: 2
tracks: 1
kind: dfao
order: msd
states: 2
initial: 0
output: 0:0 1:1
trans: 0 [0] -> 1
trans: 0 [1] -> 1
trans: 1 [0] -> 0
trans: 1 [1] -> 0
"""
    p = tmp_path / "pad.dfao"
    p.write_text(text)
    code, _, err = run_cli(capsys, "exponent", str(p))
    assert code == 2
    assert "invariant" in err


def test_state_limit_is_internal_error(files, capsys, monkeypatch):
    monkeypatch.setenv("CRITEX_MAX_STATES", "3")
    code, _, err = run_cli(capsys, "exponent", files["tm.dfao"])
    assert code == 4
    assert "states" in err


def test_console_entry_point_smoke(files):
    proc = subprocess.run(
        [sys.executable, "-m", "critex", "exponent", files["tm.dfao"], "--which", "critical"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert proc.returncode == 0
    assert "value=2/1" in proc.stdout

import subprocess
import sys

import pytest

import burau4.burau as burau
import burau4.kernelsearch as ks
from burau4.braid import NAMED, BraidWord, parse_braid
from burau4.cli import EXIT_FAILED, EXIT_KERNEL, EXIT_OK, EXIT_USAGE, run
from burau4.matrix3 import IDENTITY


def test_verify_all_pass(capsys):
    assert run(["verify"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "37/37 identities hold" in out


def test_verify_failure_exit_code(monkeypatch, capsys):
    real = burau.verify_paper_identities
    monkeypatch.setattr(
        "burau4.cli.verify_paper_identities", lambda: real(burau.T.shift(1))
    )
    assert run(["verify"]) == EXIT_FAILED
    assert "FAIL" in capsys.readouterr().out


def test_eq(capsys):
    assert run(["eq", "a", "t^-1 b t"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "equal"
    assert run(["eq", "1 2", "2 1"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "not equal"


def test_eval(capsys):
    assert run(["eval", "1 2 3"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out == ["-t, t, 0; -t, 0, t; -t, 0, 0", "det: -t^3"]


def test_translate(capsys):
    assert run(["translate", "b^-1 a b"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "m: -4" in out
    assert "syllables: t^2 d t^3 d t^3 d t^2" in out
    assert "shape: yes, exponents 3 3" in out


def test_translate_trace_and_reduce(capsys):
    assert run(["translate", "--trace", "a a^-1 b"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "reduced: b" in out
    assert "shape: no" in out


def test_word_parse_error_reports_column(capsys):
    assert run(["eval", "1 2 x"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "column 5" in err
    assert err.splitlines()[-1] == "      ^"


def test_translate_rejects_braid_letters(capsys):
    assert run(["translate", "a 1"]) == EXIT_USAGE
    assert "column 3" in capsys.readouterr().err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        run([])
    assert e.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        run(["search"])
    assert e.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        run(["search", "--max-k", "2", "--plant", "3x"])
    assert e.value.code == EXIT_USAGE
    assert run(["search", "--max-k", "-1"]) == EXIT_USAGE


def test_help_documents_grammar(capsys):
    with pytest.raises(SystemExit) as e:
        run(["--help"])
    assert e.value.code == 0
    out = capsys.readouterr().out
    for needle in ("alpha = 1 2 -3 1 -2 -1", "beta  = 3 -1", "tau   = 1 2 3", "t^-1", "q"):
        assert needle in out


def test_search_k4_streams_121_records(capsys):
    assert run(["search", "--max-k", "4"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    records = [l for l in lines if not l.startswith("#")]
    assert len(records) == 121
    assert records[0] == "0\t-\tnonscalar\t-\t-"
    assert records[-1].startswith("4\t3333\t")
    assert all(l.split("\t")[2] == "nonscalar" for l in records)


def test_search_out_file_and_plant(tmp_path, capsys):
    out = tmp_path / "r.tsv"
    assert run(["search", "--max-k", "2", "--out", str(out), "--plant", "341", "--dedup"]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert len(lines) == 14
    assert lines[-1] == "3\t341\tscalar_hit (planted)\t5\t-"
    assert "trivial braid" in capsys.readouterr().out


def test_search_corrupt_checkpoint(tmp_path, capsys):
    ck = tmp_path / "c"
    ck.write_text("# burau4 search checkpoint v1\n# sha256 00\nmax_k 2\n")
    assert run(["search", "--max-k", "2", "--checkpoint", str(ck)]) == EXIT_USAGE


def test_search_checkpoint_settings_mismatch(tmp_path, capsys):
    ck = tmp_path / "c"
    assert run(["search", "--max-k", "2", "--checkpoint", str(ck)]) == EXIT_OK
    assert run(["search", "--max-k", "2", "--checkpoint", str(ck), "--dedup"]) == EXIT_USAGE
    assert "different dedup/prune" in capsys.readouterr().err


def test_search_kernel_exit_code(monkeypatch, capsys):
    real = ks.classify

    def fake(exps, prefix, prune=True):
        if exps == (1, 1):
            return ks.SCALAR_HIT, 2, False
        return real(exps, prefix, prune)

    monkeypatch.setattr(ks, "classify", fake)
    monkeypatch.setattr(ks, "burau_eval", lambda w: IDENTITY)
    assert run(["search", "--max-k", "3"]) == EXIT_KERNEL
    captured = capsys.readouterr()
    assert "BURAU KERNEL ELEMENT FOUND" in captured.out
    assert "BURAU KERNEL ELEMENT FOUND" in captured.err


def test_round_trip_named_and_random(rng):
    for name, word in NAMED.items():
        assert parse_braid(str(word)) == word
        assert parse_braid(name) == word
    for _ in range(200):
        w = BraidWord([rng.choice((1, 2, 3, -1, -2, -3)) for _ in range(rng.randrange(12))])
        assert parse_braid(str(w)) == w


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "burau4", "eq", "b^-1", "t^2 b t^-2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "equal"

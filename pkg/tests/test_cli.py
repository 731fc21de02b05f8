import io
import json
import logging
import os
import random

import pytest

from heckeseries import verify as V
from heckeseries.cli import CHECK_IDS, main
from heckeseries.glhecke import omega_t, primitive_tuples
from heckeseries.inversion import series_from_text
from heckeseries.golden import golden
from heckeseries.kernel import SymPoly
from heckeseries.pipeline import OmegaCache, omega_table, run_id


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for k in list(os.environ):
        if k.startswith("HECKESERIES_"):
            monkeypatch.delenv(k)


def run(*argv):
    out = io.StringIO()
    code = main(["-q", *argv], out=out)
    return code, out.getvalue()


def test_omega_text_with_erratum():
    code, text = run("omega", "--n", "4", "--delta", "0,1,1,1")
    assert code == 0
    first, second = text.splitlines()
    assert first == "p^-6 * sym[1,1,1,0]"
    assert second.startswith("erratum:") and "p^-3" in second


def test_omega_formats():
    code, text = run("omega", "--n", "2", "--delta", "0,2", "--format", "canonical")
    assert code == 0
    assert SymPoly.from_text(2, text) == omega_t((0, 2))
    code, text = run("omega", "--n", "4", "--delta", "0,1,1,1", "--format", "json")
    body = json.loads(text)
    assert body["delta"] == [0, 1, 1, 1] and "erratum" in body
    assert body["terms"] == [{"part": [1, 1, 1, 0], "p": {"min": -6, "coeffs": [1]}}]


@pytest.mark.parametrize(
    "argv",
    [
        ("omega", "--n", "4", "--delta", "1,0,0,0"),
        ("omega", "--n", "3", "--delta", "0,0,1,1"),
        ("omega", "--n", "2", "--delta", "0,x"),
        ("omega", "--n", "2", "--delta", "0,1", "--format", "yaml"),
        ("verify", "--check", "golden-9"),
        ("theorem", "--n", "1", "--jobs", "0"),
        ("theorem", "--n", "0"),
        ("bogus",),
        (),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "usage error" in capsys.readouterr().err


def test_verify_unknown_id_lists_valid_ids(capsys):
    assert run("verify", "--check", "nope")[0] == 2
    err = capsys.readouterr().err
    assert all(cid in err for cid in CHECK_IDS)


def test_verify_selected_checks():
    code, text = run("verify", "--check", "golden-1,golden-2", "--check", "lp-oracle")
    assert code == 0
    lines = [l for l in text.splitlines() if not l.startswith("    ")]
    assert [l.split()[0] for l in lines] == ["golden-1", "golden-2", "lp-oracle"]
    assert all(l.split()[1] == "pass" for l in lines)


def test_verify_json_and_failure_exit(monkeypatch):
    code, text = run("verify", "--check", "omega-examples", "--format", "json")
    assert code == 0
    assert json.loads(text)[0]["status"] == "erratum-noted"
    monkeypatch.setattr(V, "check_lp_oracle", lambda: V.CheckReport("lp-oracle", "fail", "forced"))
    code, text = run("verify", "--check", "lp-oracle")
    assert code == 1
    assert "witness: forced" in text


def test_theorem_genus1(tmp_path):
    code, text = run("theorem", "--n", "1", "--out", str(tmp_path), "--format", "both")
    assert code == 0
    assert "e_0 = 1" in text
    assert "f_1 = -T" in text
    names = sorted(os.listdir(tmp_path))
    assert names == ["E.json", "E.txt", "F.json", "F.txt", "manifest.json", "omega_E.txt", "omega_F.txt"]
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["genus"] == 1 and manifest["run"] == run_id(manifest)
    header = (tmp_path / "F.txt").read_text().splitlines()[0]
    assert header == "# manifest manifest.json run %s" % manifest["run"]
    assert series_from_text(1, (tmp_path / "F.txt").read_text()) == golden(1)[1]
    assert json.loads((tmp_path / "E.json").read_text())["run"] == manifest["run"]


def test_env_fallback_and_flag_precedence(monkeypatch, tmp_path):
    monkeypatch.setenv("HECKESERIES_FORMAT", "json")
    code, text = run("omega", "--n", "2", "--delta", "0,1")
    assert code == 0 and json.loads(text)["n"] == 2
    code, text = run("omega", "--n", "2", "--delta", "0,1", "--format", "text")
    assert text.strip() == "p^-1 * sym[1,0]"
    monkeypatch.setenv("HECKESERIES_FORMAT", "text")
    monkeypatch.setenv("HECKESERIES_OUT", str(tmp_path / "env"))
    monkeypatch.setenv("HECKESERIES_DEGREE", "1")
    assert run("theorem", "--n", "2")[0] == 0
    manifest = json.loads((tmp_path / "env" / "manifest.json").read_text())
    assert manifest["degree"] == 1
    assert run("theorem", "--n", "2", "--degree", "2", "--out", str(tmp_path / "flag"))[0] == 0
    assert json.loads((tmp_path / "flag" / "manifest.json").read_text())["degree"] == 2
    monkeypatch.setenv("HECKESERIES_JOBS", "many")
    assert run("theorem", "--n", "1")[0] == 2


def test_cache_corruption_is_detected_and_repaired(tmp_path, caplog):
    cache = str(tmp_path / "cache")
    assert run("theorem", "--n", "2", "--cache", cache, "--out", str(tmp_path / "a"))[0] == 0
    store = OmegaCache(cache, 2)
    path = store.path((0, 2))
    good = open(path).read()
    with open(path, "w") as fh:
        fh.write(good.replace("-> [", "-> [7", 1))
    with caplog.at_level(logging.WARNING, logger="heckeseries"):
        assert run("theorem", "--n", "2", "--cache", cache, "--out", str(tmp_path / "b"))[0] == 0
    assert any("checksum" in r.getMessage() for r in caplog.records)
    assert open(path).read() == good
    for name in ("E.txt", "F.txt", "omega_E.txt"):
        assert (tmp_path / "a" / name).read_text() == (tmp_path / "b" / name).read_text()


def test_cache_soundness_random_tuples(tmp_path):
    cache = str(tmp_path)
    values, stats = omega_table(4, 6, cache=cache)
    assert stats["tuples"] == len(primitive_tuples(4, 6))
    store = OmegaCache(cache, 4)
    rng = random.Random(20)
    for d in rng.sample(primitive_tuples(4, 6), 50):
        assert store.load(d) == omega_t(d) == values[d]
    _, again = omega_table(4, 6, cache=cache)
    assert again["computed"] == 0
    assert store.load((0, 9, 9, 9)) is None

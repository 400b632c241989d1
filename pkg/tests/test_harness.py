import json
import os

import pytest

from chibound.cli import main as cli_main
from chibound.graphio import parse_graph6
from chibound.harness import ExperimentConfig, run_experiment, verify_lemma

SMALL_CONFIG = {
    "corpus": [
        {"generator": "cycle", "n": 5, "expect_chi": 3, "expect_omega": 2},
        {"generator": "petersen", "expect_chi": 3, "expect_omega": 2},
        {"generator": "grotzsch", "expect_chi": 4, "expect_omega": 2},
        {"generator": "random", "n": 8, "p": "0.4", "seed": 11},
    ],
    "checks": [
        {"check": "invariants"},
        {"check": "stable_removal_degree"},
        {"check": "gyarfas", "k_max": 2, "starts": 2},
        {"check": "x_split", "min_chi": 0},
        {"check": "spire", "d": 1, "min_chi": 0},
        {"check": "starry", "k": 1, "d": 1},
    ],
}


def read_tree(root):
    out = {}
    for dirpath, _, files in os.walk(root):
        for name in files:
            if name == "timings.csv":
                continue
            path = os.path.join(dirpath, name)
            with open(path, "rb") as fh:
                out[os.path.relpath(path, root)] = fh.read()
    return out


def test_empty_corpus():
    config = ExperimentConfig.from_dict({"corpus": [], "checks": []})
    report = run_experiment(config)
    assert report.rows == [] and report.summary["violations"] == 0


def test_known_values_corpus(tmp_path):
    config = ExperimentConfig.from_dict(SMALL_CONFIG)
    report = run_experiment(config, output_dir=str(tmp_path / "out"))
    assert report.summary["violations"] == 0
    by_check = {}
    for row in report.rows:
        by_check.setdefault(row["check"], []).append(row)
    assert [r["chi"] for r in by_check["invariants"]] == [3, 3, 4, by_check["invariants"][3]["chi"]]
    assert all(r["outcome"] == "pass" for r in by_check["stable_removal_degree"])
    assert all(r["outcome"] == "pass" for r in by_check["gyarfas"])


def test_certificates_revalidate_in_isolation(tmp_path):
    out = tmp_path / "out"
    config = ExperimentConfig.from_dict(SMALL_CONFIG)
    run_experiment(config, output_dir=str(out))
    cert_dir = out / "certificates"
    corpus_dir = out / "corpus"
    corpus = {}
    for name in os.listdir(corpus_dir):
        index = int(name.split("_")[0])
        corpus[index] = parse_graph6((corpus_dir / name).read_text())
    checked = 0
    for name in sorted(os.listdir(cert_dir)):
        obj = json.loads((cert_dir / name).read_text())
        index = int(name.split("_")[0])
        ok, clause = verify_lemma(None, corpus[index], obj)
        assert ok, (name, clause)
        checked += 1
    assert checked >= 4


def test_reports_are_byte_identical(tmp_path):
    config = ExperimentConfig.from_dict(SMALL_CONFIG)
    run_experiment(config, output_dir=str(tmp_path / "a"))
    run_experiment(config, output_dir=str(tmp_path / "b"))
    ta, tb = read_tree(tmp_path / "a"), read_tree(tmp_path / "b")
    assert ta.keys() == tb.keys()
    assert all(ta[k] == tb[k] for k in ta)


def test_worker_pool_matches_serial(tmp_path):
    config = ExperimentConfig.from_dict(SMALL_CONFIG)
    run_experiment(config, output_dir=str(tmp_path / "serial"))
    config2 = ExperimentConfig.from_dict({**SMALL_CONFIG, "workers": 2})
    run_experiment(config2, output_dir=str(tmp_path / "pool"))
    ta, tb = read_tree(tmp_path / "serial"), read_tree(tmp_path / "pool")
    assert ta == tb


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig.from_dict({"corpus": [{"generator": "random", "n": 5, "p": "0.5"}], "checks": []})
    with pytest.raises(ValueError):
        ExperimentConfig.from_dict({"corpus": [{"generator": "wat"}], "checks": []})
    with pytest.raises(ValueError):
        ExperimentConfig.from_dict({"corpus": [], "checks": [{"check": "wat"}]})
    with pytest.raises(ValueError):
        ExperimentConfig.from_dict({"corpus": [{"n": 5}], "checks": []})


def test_verify_lemma_type_mismatch():
    from chibound.generators import star_graph

    with pytest.raises(ValueError):
        verify_lemma("spire", star_graph(3), {"type": "x_split", "x": 0, "y": 1, "z_set": [2], "x_ground": [0]})


# ----------------------------------------------------------------- CLI

def test_cli_gen_chi_roundtrip(tmp_path, capsys):
    out = tmp_path / "c5.g6"
    assert cli_main(["gen", "--generator", "cycle", "--set", "n=5", "--out", str(out)]) == 0
    assert cli_main(["chi", "--graph", str(out), "--witness"]) == 0
    payload = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert payload["chi"] == 3 and len(payload["coloring"]) == 5


def test_cli_threshold(capsys):
    assert cli_main(["threshold", "--lemma", "T2.2", "--set", "c=0", "--set", "tau=1"]) == 0
    assert "value: 6" in capsys.readouterr().out


def test_cli_verify_and_run(tmp_path, capsys):
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps(SMALL_CONFIG))
    out_dir = tmp_path / "out"
    assert cli_main(["run", "--config", str(config_path), "--out", str(out_dir)]) == 0
    capsys.readouterr()
    cert = next(p for p in sorted((out_dir / "certificates").iterdir()) if "spire" in p.name)
    index = int(cert.name.split("_")[0])
    graph_file = next(p for p in (out_dir / "corpus").iterdir() if p.name.startswith(f"{index:04d}_"))
    rc = cli_main(["verify", "--graph", str(graph_file), "--certificate", str(cert)])
    payload = json.loads(capsys.readouterr().out.strip())
    assert rc == 0 and payload["accepted"] is True


def test_cli_counterexample(capsys):
    rc = cli_main(["counterexample", "--variant", "split-pairs", "--k", "2"])
    payload = json.loads(capsys.readouterr().out.strip())
    assert rc == 0 and payload["chi_after"] == 3


def test_cli_find_tree_and_starry(tmp_path, capsys):
    out = tmp_path / "pg.g6"
    cli_main(["gen", "--generator", "petersen", "--out", str(out)])
    capsys.readouterr()
    assert cli_main(["find-tree", "--graph", str(out), "--tree", "broom",
                     "--set", "k=1", "--set", "d=2", "--anchor-host", "0"]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    assert payload["found"] and payload["embedding"]
    assert cli_main(["starry", "--graph", str(out), "--k", "1", "--d", "1"]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    assert payload["starry"] is True


def test_cli_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("D")
    assert cli_main(["chi", "--graph", str(bad)]) == 2

import json
from pathlib import Path

import pytest

from gqg.cli import SELFTEST_CONFIG, ConfigError, SessionConfig, build_report, main

ROOT = Path(__file__).resolve().parents[1]
RANK1 = json.loads((ROOT / "configs" / "rank1_generic.json").read_text())


def run(tmp_path, cfg, *extra):
    cpath = tmp_path / "cfg.json"
    cpath.write_text(json.dumps(cfg))
    out = tmp_path / "out.json"
    code = main(["run", "--config", str(cpath), "--out", str(out), *extra])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_selftest(tmp_path):
    out = tmp_path / "self.json"
    assert main(["run", "--task", "selftest", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    st = rep["tasks"]["selftest"]
    assert st["passed"] and st["h_profile"] == [1, 0, 4, 1, 0, 1, 4, 0]
    assert sorted(map(tuple, st["roots"])) == [(0, 1), (1, 0), (1, 1), (2, 1)]
    assert rep["schema"] == 1 and rep["status"] == "ok"


def test_rank1_roots(tmp_path):
    code, rep = run(tmp_path, RANK1, "--task", "roots")
    assert code == 0
    roots = rep["tasks"]["roots"]["roots"]
    assert [(r["root"], r["phi"]) for r in roots] == [([1], 1)]
    assert rep["tasks"]["roots"]["hilbert_check"]


def test_rank1_verify(tmp_path):
    code, rep = run(tmp_path, RANK1, "--task", "verify")
    assert code == 0
    entries = rep["tasks"]["verify"]["entries"]
    assert len(entries) == 10
    assert all(e["e_checks_pass"] and e["sh_matches"] and e["skew_central"] for e in entries)


def test_all_tasks_and_probe(tmp_path):
    code, rep = run(tmp_path, RANK1)
    assert code == 0
    assert set(rep["tasks"]) == {"roots", "dims", "center", "verify", "probe"}
    assert rep["tasks"]["probe"]["status"] == "agree"


def test_reproducible(tmp_path):
    cfg = SessionConfig.from_dict(dict(RANK1))
    a, _ = build_report(cfg, cfg.tasks)
    b, _ = build_report(cfg, cfg.tasks)
    a.pop("timestamp"), b.pop("timestamp")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["config_hash"] == cfg.digest()


def test_default_output_is_content_addressed(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    cpath = tmp_path / "cfg.json"
    cpath.write_text(json.dumps(RANK1))
    assert main(["run", "--config", str(cpath), "--task", "roots"]) == 0
    digest = SessionConfig.from_dict(dict(RANK1)).digest()
    assert (tmp_path / "reports" / f"{digest[:16]}.json").exists()


@pytest.mark.parametrize("patch", [
    {"chi": [["0"]]},
    {"chi": [["2", "3"]]},
    {"degree_bound": [-1]},
    {"tasks": ["nonsense"]},
    {"window": {"lambda": [[2], [0]], "mu": [[0], [1]]}},
    {"chi": [["z^"]]},
    {"colour": "blue"},
])
def test_config_errors(tmp_path, patch):
    cfg = dict(RANK1, **patch)
    with pytest.raises(ConfigError):
        SessionConfig.from_dict(cfg)
    code, rep = run(tmp_path, cfg)
    assert code == 1 and rep is None


def test_missing_config(tmp_path):
    assert main(["run", "--config", str(tmp_path / "none.json"), "--out", str(tmp_path / "o.json")]) == 1
    assert main(["run", "--task", "roots"]) == 1


def test_hypothesis_violation_skips_center(tmp_path):
    cfg = dict(RANK1, chi=[["1"]], tasks=["center"])
    code, rep = run(tmp_path, cfg)
    assert code == 0
    assert rep["tasks"]["center"]["status"] == "skipped"


def test_selftest_config_is_valid():
    cfg = SessionConfig.from_dict(dict(SELFTEST_CONFIG))
    assert cfg.table().q[0][0] == cfg.fld().zeta(5)

import json
import pathlib
from typing import Any

import pytest

from subcast.cli import EXIT_GUARD, EXIT_OK, EXIT_USAGE
from subcast.cli.main import main

from ..fixtures import SubcastFileFixtureFactory


def run_json(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, Any]:
    capsys.readouterr()
    ret = main(["subcast", *argv, "--format", "json"])
    out = capsys.readouterr().out
    return ret, json.loads(out) if out.strip() else None


def test_volume(capsys: pytest.CaptureFixture[str]) -> None:
    ret, doc = run_json(capsys, "volume", "--q", "2", "--m", "2", "--r", "1", "--k", "1")
    assert ret == EXIT_OK
    assert doc["ty"] == "volume-v1"
    assert doc["quantity"] == "ball"
    assert doc["value"] == "3"
    assert doc["run_config"]["command"] == "volume"
    assert doc["run_config"]["params"]["q"] == "2"
    assert doc["run_config"]["format"] == "json"

    _, doc = run_json(capsys, "volume", "--q", "2", "--m", "2", "--r", "1", "--avg", "--oracle")
    assert doc["value"] == "17/5"
    assert doc["oracle"] == "17/5"

    _, doc = run_json(capsys, "volume", "--q", "2", "--m", "3", "--k", "1", "--sphere", "0")
    assert doc["quantity"] == "sphere"
    assert doc["value"] == "1"


def test_distance_and_enumerate(capsys: pytest.CaptureFixture[str]) -> None:
    ret, doc = run_json(capsys, "distance", "--q", "2", "--m", "2", "[[0,1]]", "[[1,0]]")
    assert ret == EXIT_OK
    assert doc["distance"] == "2"

    _, doc = run_json(capsys, "enumerate", "--q", "2", "--m", "2", "--l", "1")
    assert doc["count"] == "3"
    assert doc["subspaces"] == [[[0, 1]], [[1, 0]], [[1, 1]]]


def test_separation(
    capsys: pytest.CaptureFixture[str],
    subcast_file: SubcastFileFixtureFactory,
) -> None:
    with subcast_file.encoder("two_clouds") as p:
        ret, doc = run_json(capsys, "separation", str(p))
    assert ret == EXIT_OK
    assert doc["ty"] == "separation-v1"
    assert doc["separation"] == {"s1": "1", "s2": "1"}
    assert doc["decomposition"] is None

    with subcast_file.encoder("single_cloud") as p:
        _, doc = run_json(capsys, "separation", str(p))
    assert doc["separation"]["s2"] == "unbounded"

    with subcast_file.encoder("layered") as p:
        _, doc = run_json(capsys, "separation", str(p))
    assert doc["separation"] == {"s1": "1", "s2": "2"}
    assert doc["decomposition"]["center_min_distance"] == "2"


def test_construct_then_separation(
    capsys: pytest.CaptureFixture[str],
    tmp_path: pathlib.Path,
) -> None:
    out = tmp_path / "enc.json"
    argv = ["construct", "--q", "2", "--m", "3", "--s1", "1", "--s2", "2", "--m1", "2"]
    assert main(["subcast", *argv, "-o", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["run_config"]["command"] == "construct"

    ret, sep = run_json(capsys, "separation", str(out))
    assert ret == EXIT_OK
    assert sep["separation"]["s1"] == "1"
    assert int(sep["separation"]["s2"]) >= 2


def test_construct_records_field(tmp_path: pathlib.Path) -> None:
    out = tmp_path / "lines.json"
    argv = ["construct", "--q", "2", "--m", "2", "--l", "1", "--s1", "2", "--s2", "2"]
    assert main(["subcast", *argv, "-o", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["field"] == {"p": 2, "e": 1, "modulus": [0, 1]}
    assert doc["singer_modulus"] == [1, 1, 1]
    assert doc["run_config"]["params"]["singer"] is None

    assert main(["subcast", *argv, "--no-singer", "-o", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert "singer_modulus" not in doc
    assert doc["run_config"]["params"]["singer"] == "false"


def test_bound_corollary(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["bound", "--corollary", "--q", "2", "--m", "2", "--n", "1", "--l", "1"]
    argv += ["--s1", "1", "--s2", "2", "--m1", "2"]
    ret, doc = run_json(capsys, *argv)
    assert ret == EXIT_OK
    assert doc["ty"] == "boundreport-v1"
    assert doc["m2_ceiling"] == "3"
    assert doc["rhs"] == "4"
    assert doc["verdict"] == "computed"

    ret, doc = run_json(capsys, *argv, "--m2", "4")
    assert ret == EXIT_OK
    assert doc["verdict"] == "violated"


def test_bound_gaussian_bounds(capsys: pytest.CaptureFixture[str]) -> None:
    ret, doc = run_json(capsys, "bound", "--gaussian-bounds", "--n", "4", "--l", "2", "--q", "3")
    assert ret == EXIT_OK
    assert (doc["lower"], doc["value"], doc["upper"]) == ("81", "130", "324")
    assert doc["holds"] is True

    ret, doc = run_json(capsys, "bound", "--fact1", "--n", "3", "--l", "1", "--q", "2")
    assert ret == EXIT_OK
    assert (doc["lower"], doc["value"], doc["upper"]) == ("4", "7", "16")


def test_bound_encoder(
    capsys: pytest.CaptureFixture[str],
    subcast_file: SubcastFileFixtureFactory,
) -> None:
    with subcast_file.encoder("layered") as p:
        ret, doc = run_json(capsys, "bound", "--encoder", str(p))
    assert ret == EXIT_OK
    assert doc["verdict"] == "satisfied"
    assert doc["lhs"] == "4"


def test_verify_theorem(capsys: pytest.CaptureFixture[str]) -> None:
    ret, doc = run_json(capsys, "verify-theorem", "--q", "2", "--m", "2")
    assert ret == EXIT_OK
    assert doc["ty"] == "theoremsweep-v1"
    assert doc["encoders"] == "120"
    assert doc["violations"] == "0"

    ret, doc2 = run_json(capsys, "bound", "--verify-theorem", "--q", "2", "--m", "2")
    assert ret == EXIT_OK
    assert doc2["encoders"] == "120"


def test_tmin(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["tmin", "--q", "2", "--m", "2", "--d", "2", "--N", "2", "--r", "1"]
    ret, doc = run_json(capsys, *argv, "--method", "all")
    assert ret == EXIT_OK
    assert doc["results"]["exact"]["value"] == "4"
    assert doc["results"]["trivial"]["value"] == "2"
    assert int(doc["results"]["greedy"]["value"]) >= 4
    assert doc["notes"] == {}

    ret, doc = run_json(capsys, "tmin", "--q", "2", "--m", "2", "--d", "3", "--N", "2", "--r", "1")
    assert ret == EXIT_OK
    assert doc["results"]["exact"] is None
    assert doc["notes"]["exact"] == "infeasible"


def test_simulate_is_reproducible(
    capsys: pytest.CaptureFixture[str],
    subcast_file: SubcastFileFixtureFactory,
) -> None:
    with subcast_file.encoder("layered") as p:
        argv = ["simulate", "--encoder", str(p), "--eps", "0.3", "--trials", "100", "--seed", "7"]
        capsys.readouterr()
        assert main(["subcast", *argv, "--format", "json", "--threads", "1"]) == EXIT_OK
        first = capsys.readouterr().out
        assert main(["subcast", *argv, "--format", "json", "--threads", "3"]) == EXIT_OK
        second = capsys.readouterr().out
    assert first == second

    doc = json.loads(first)
    assert doc["ty"] == "simreport-v1"
    assert doc["run_config"]["params"]["seed"] == "7"
    assert "threads" not in doc["run_config"]["params"]


def test_simulate_noiseless_default_encoder(capsys: pytest.CaptureFixture[str]) -> None:
    ret, doc = run_json(capsys, "simulate", "--eps", "0", "--trials", "100")
    assert ret == EXIT_OK
    for u in ("1", "2"):
        assert doc["users"][u]["decode_errors"] == "0"
        assert doc["users"][u]["histogram"] == {"0": "100"}
    assert doc["violations"] == []


def test_usage_errors(capsys: pytest.CaptureFixture[str], tmp_path: pathlib.Path) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["subcast", "volume", "--m", "2"])
    assert exc.value.code == EXIT_USAGE

    assert main(["subcast", "volume", "--q", "2", "--m", "2", "--avg"]) == EXIT_USAGE
    assert main(["subcast", "separation", str(tmp_path / "missing.json")]) == EXIT_USAGE

    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]", encoding="utf-8")
    assert main(["subcast", "separation", str(bad)]) == EXIT_USAGE
    header = '{"q": 2, "m": 2, "n": 1, "m1_size": 1, "m2_size": 1'
    for entries in ("5", "null", "[7]"):
        bad.write_text(f'{header}, "entries": {entries}}}', encoding="utf-8")
        assert main(["subcast", "separation", str(bad)]) == EXIT_USAGE
    assert main(["subcast", "simulate", "--trials", "10", "--seed", "-1"]) == EXIT_USAGE
    singer = ["construct", "--q", "2", "--m", "2", "--s1", "1", "--s2", "2", "--singer"]
    assert main(["subcast", *singer]) == EXIT_USAGE


def test_guard_exit(capsys: pytest.CaptureFixture[str]) -> None:
    ret = main(["subcast", "enumerate", "--q", "2", "--m", "4", "--limit", "10"])
    assert ret == EXIT_GUARD
    argv = ["tmin", "--q", "2", "--m", "3", "--d", "2", "--N", "4", "--r", "1"]
    assert main(["subcast", *argv, "--node-limit", "2"]) == EXIT_GUARD


def test_env_limit(capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SUBCAST_ENUMERATION_LIMIT", "5")
    assert main(["subcast", "enumerate", "--q", "2", "--m", "3"]) == EXIT_GUARD
    assert main(["subcast", "enumerate", "--q", "2", "--m", "3", "--limit", "16"]) == EXIT_OK

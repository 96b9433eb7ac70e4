import pathlib

import pytest

import subcast


@pytest.fixture(autouse=True)
def isolated_config(tmp_path: pathlib.Path, monkeypatch: pytest.MonkeyPatch) -> pathlib.Path:
    cfg_home = tmp_path / "config"
    monkeypatch.setenv("XDG_CONFIG_HOME", str(cfg_home))
    monkeypatch.setenv("XDG_CONFIG_DIRS", str(tmp_path / "xdg"))
    monkeypatch.delenv("SUBCAST_ENUMERATION_LIMIT", raising=False)
    subcast.set_porcelain(False)
    return cfg_home

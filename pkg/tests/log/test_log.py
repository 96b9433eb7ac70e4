import io
import json
from typing import Iterator

import pytest

import subcast
from subcast import log
from subcast.utils.porcelain import PorcelainOutput


@pytest.fixture
def porcelain_sink(monkeypatch: pytest.MonkeyPatch) -> Iterator[io.BytesIO]:
    buf = io.BytesIO()
    monkeypatch.setattr(log, "PORCELAIN_SINK", PorcelainOutput(buf))
    subcast.set_porcelain(True)
    yield buf
    subcast.set_porcelain(False)
    subcast.set_debug(False)


def records(buf: io.BytesIO) -> list[dict[str, object]]:
    return [json.loads(line) for line in buf.getvalue().splitlines()]


def test_porcelain_strips_markup(porcelain_sink: io.BytesIO) -> None:
    log.W("guard [bold]near[/bold] limit")
    log.F("bad input")
    recs = records(porcelain_sink)
    assert [r["lvl"] for r in recs] == ["W", "F"]
    assert recs[0]["msg"] == "guard near limit"
    assert all(r["ty"] == "log-v1" for r in recs)


def test_debug_suppressed_unless_enabled(porcelain_sink: io.BytesIO) -> None:
    subcast.set_debug(False)
    log.D("hidden")
    assert records(porcelain_sink) == []

    subcast.set_debug(True)
    log.D("shown")
    assert [r["msg"] for r in records(porcelain_sink)] == ["shown"]


def test_progress_milestones(porcelain_sink: io.BytesIO) -> None:
    subcast.set_debug(True)
    for i in range(1, 26):
        log.progress("encoders", i, 10, 25)
    msgs = [r["msg"] for r in records(porcelain_sink)]
    assert msgs == ["encoders: 10 of 25", "encoders: 20 of 25"]


def test_stdout_plain_keeps_brackets(capsys: pytest.CaptureFixture[str]) -> None:
    log.stdout_plain('{"word":[[1,0]]}')
    assert capsys.readouterr().out == '{"word":[[1,0]]}\n'

"""Diagnostics for subcast.

Results go to stdout through :func:`stdout` or :func:`stdout_plain`; every
other message goes to stderr, either as rich markup or, in porcelain mode,
as one ``log-v1`` JSON object per line."""

import datetime
import io
import sys
import time
from typing import Any, Final, Literal

from rich.console import Console, ConsoleRenderable
from rich.text import Text

from .. import is_debug, is_porcelain
from ..utils.porcelain import PorcelainEntity, PorcelainEntityType, PorcelainOutput

Level = Literal["D", "I", "W", "F"]


class PorcelainLog(PorcelainEntity):
    t: int
    """Timestamp of the message line in microseconds"""

    lvl: str
    """Log level of the message line (one of D, F, I, W)"""

    msg: str
    """Message content"""


def log_time_formatter(x: datetime.datetime) -> Text:
    return Text(f"debug: [{x.isoformat()}]")


STDOUT_CONSOLE: Final = Console(file=sys.stdout, highlight=False, soft_wrap=True)
DEBUG_CONSOLE: Final = Console(
    file=sys.stderr,
    log_time_format=log_time_formatter,
    soft_wrap=True,
)
LOG_CONSOLE: Final = Console(file=sys.stderr, highlight=False, soft_wrap=True)
PORCELAIN_SINK: Final = PorcelainOutput(sys.stderr.buffer)

_PREFIXES: Final[dict[Level, str]] = {
    "I": "[bold green]info:[/bold green]",
    "W": "[bold yellow]warn:[/bold yellow]",
    "F": "[bold red]fatal error:[/bold red]",
}

Renderable = str | ConsoleRenderable


def _porcelain_record(lvl: Level, message: Renderable, sep: str, *objects: Any) -> PorcelainLog:
    # render markup away so consumers get plain text
    with io.StringIO() as buf:
        Console(file=buf).print(message, *objects, sep=sep, end="")
        return {
            "ty": PorcelainEntityType.LogV1,
            "t": int(time.time() * 1000000),
            "lvl": lvl,
            "msg": buf.getvalue(),
        }


def _emit(lvl: Level, message: Renderable, sep: str, end: str, *objects: Any) -> None:
    if is_porcelain():
        PORCELAIN_SINK.emit(_porcelain_record(lvl, message, sep, *objects))
        return
    LOG_CONSOLE.print(f"{_PREFIXES[lvl]} {message}", *objects, sep=sep, end=end)


def stdout(
    message: Renderable,
    *objects: Any,
    sep: str = " ",
    end: str = "\n",
) -> None:
    return STDOUT_CONSOLE.print(message, *objects, sep=sep, end=end)


def stdout_plain(text: str) -> None:
    """Writes machine-readable text (JSON, CSV) verbatim, bypassing rich markup
    processing so that brackets in the payload survive."""

    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")
    sys.stdout.flush()


def D(
    message: Renderable,
    *objects: Any,
    sep: str = " ",
    end: str = "\n",
    _stack_offset_delta: int = 0,
) -> None:
    if not is_debug():
        return
    if is_porcelain():
        PORCELAIN_SINK.emit(_porcelain_record("D", message, sep, *objects))
        return
    DEBUG_CONSOLE.log(
        message,
        *objects,
        sep=sep,
        end=end,
        _stack_offset=2 + _stack_offset_delta,
    )


def I(  # noqa: E743 # the name intentionally mimics Android logging for brevity
    message: Renderable,
    *objects: Any,
    sep: str = " ",
    end: str = "\n",
) -> None:
    _emit("I", message, sep, end, *objects)


def W(
    message: Renderable,
    *objects: Any,
    sep: str = " ",
    end: str = "\n",
) -> None:
    _emit("W", message, sep, end, *objects)


def F(
    message: Renderable,
    *objects: Any,
    sep: str = " ",
    end: str = "\n",
) -> None:
    _emit("F", message, sep, end, *objects)


def progress(what: str, done: int, every: int, total: int | None = None) -> None:
    """Debug milestone for long enumerations: logs once per ``every`` items."""

    if done % every:
        return
    of = "" if total is None else f" of {total}"
    D(f"{what}: {done}{of}", _stack_offset_delta=1)

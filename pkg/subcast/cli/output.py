"""Rendering of command results as rich tables, CSV or canonical JSON.

Every JSON document carries the run config that produced it, so a result
file is enough to rerun the computation."""

import argparse
import csv
import sys
from typing import Any, Iterable, Mapping, Sequence, TypedDict

from rich import box
from rich.markup import escape
from rich.table import Table

from .. import is_porcelain, log
from ..config import GlobalConfig
from ..config.schema import OUTPUT_FORMATS
from ..utils.porcelain import PorcelainEntityType, PorcelainOutput, dumps_canonical


class RunConfig(TypedDict):
    command: str
    params: dict[str, str | None]
    format: str


def add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default=None,
        help="Output format (default: the output.format config option)",
    )


def add_guard_args(p: argparse.ArgumentParser, search: bool = False) -> None:
    p.add_argument(
        "--limit",
        type=int,
        default=None,
        help="Maximum size of any enumerated set (default: guards.enumeration_limit)",
    )
    if search:
        p.add_argument(
            "--node-limit",
            type=int,
            default=None,
            help="Maximum branch-and-bound nodes (default: guards.search_node_limit)",
        )


def enumeration_limit(cfg: GlobalConfig, args: argparse.Namespace) -> int:
    v: int | None = getattr(args, "limit", None)
    if v is None:
        return cfg.enumeration_limit
    if v < 1:
        raise ValueError(f"--limit must be positive, got {v}")
    return v


def node_limit(cfg: GlobalConfig, args: argparse.Namespace) -> int:
    v: int | None = getattr(args, "node_limit", None)
    if v is None:
        return cfg.search_node_limit
    if v < 1:
        raise ValueError(f"--node-limit must be positive, got {v}")
    return v


def output_format(cfg: GlobalConfig, args: argparse.Namespace) -> str:
    if is_porcelain():
        return "json"
    fmt: str | None = getattr(args, "format", None)
    return fmt or cfg.output_format


def _param_str(v: object) -> str | None:
    if v is None:
        return None
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def make_run_config(
    args: argparse.Namespace,
    fmt: str,
    keys: Iterable[str],
) -> RunConfig:
    return {
        "command": args.cmd_name,
        "params": {k: _param_str(getattr(args, k, None)) for k in keys},
        "format": fmt,
    }


def emit_document(ty: PorcelainEntityType, rc: RunConfig, doc: Mapping[str, Any]) -> None:
    payload = {"ty": ty, "run_config": rc, **doc}
    if is_porcelain():
        with PorcelainOutput() as po:
            po.emit(payload)
        return
    log.stdout_plain(dumps_canonical(payload))


def emit_rows(
    fmt: str,
    columns: Sequence[str],
    rows: Iterable[Sequence[object]],
    title: str | None = None,
) -> None:
    """Table or CSV output of plain rows; one header row in CSV."""

    if fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_param_str(x) or "" for x in row])
        sys.stdout.flush()
        return

    tbl = Table(box=box.SIMPLE, show_edge=False, title=title)
    for c in columns:
        tbl.add_column(c)
    for row in rows:
        tbl.add_row(*(escape(_param_str(x) or "-") for x in row))
    log.stdout(tbl)


def emit_fields(fmt: str, fields: Sequence[tuple[str, object]], title: str | None = None) -> None:
    emit_rows(fmt, ("quantity", "value"), fields, title)
